#include "e2lab/explorer.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <unordered_map>

namespace e2lab {

namespace {

struct PairKey {
    Int a1, b1, a2, b2;

    friend bool operator==(const PairKey&, const PairKey&) = default;
};

PairKey key_of(const UniPair& p) {
    return PairKey{p.alpha.a, p.alpha.b, p.beta.a, p.beta.b};
}

struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const {
        std::size_t seed = 0;
        boost::hash_combine(seed, k.a1);
        boost::hash_combine(seed, k.b1);
        boost::hash_combine(seed, k.a2);
        boost::hash_combine(seed, k.b2);
        return seed;
    }
};

// Generator parameters sorted by (norm_sq, a, b), with norms cached so a
// per-state cutoff can be binary searched.
struct GenSet {
    std::vector<QuadInt> ts;
    std::vector<Int> norms;
};

GenSet build_gens(const Ring& ring, const Int& gen_norm_cap) {
    GenSet g;
    g.ts = elements_with_norm_up_to(ring, gen_norm_cap);
    g.norms.reserve(g.ts.size());
    for (const auto& t : g.ts) g.norms.push_back(norm_sq(t));
    return g;
}

// Largest prefix of gens usable for a step that must land the moved entry
// inside state_norm_cap: |t|*|mult| = |moved' - moved| <= |moved| +
// sqrt(cap), so norm_sq(t) * mult_norm <= (|moved| + sqrt(cap))^2. The
// integer bound rounds both roots up, which only widens the prefix. Valid
// even when the current moved entry is already outside the window.
std::size_t gen_cutoff(const GenSet& gens, const Int& mult_norm, const Int& moved_norm,
                       const Int& state_cap) {
    Int s = isqrt(moved_norm) + isqrt(state_cap) + 2;
    Int bound = s * s;
    auto it = std::upper_bound(gens.norms.begin(), gens.norms.end(), bound,
                               [&](const Int& lhs, const Int& rhs) { return lhs < rhs * mult_norm; });
    return static_cast<std::size_t>(it - gens.norms.begin());
}

ElemMove placeholder_move(const Ring& ring) {
    return ElemMove{Side::Upper, qi_int(ring, 0)};
}

struct Bfs {
    std::vector<UniPair> visited;
    std::vector<Int> norm_a, norm_b;
    std::vector<std::int64_t> parent;
    std::vector<ElemMove> via;
    std::unordered_map<PairKey, std::size_t, PairKeyHash> index;
    std::vector<std::size_t> frontier;
    std::uint64_t depth = 0;
    bool budget_hit = false;

    explicit Bfs(const UniPair& start) {
        visited.push_back(start);
        norm_a.push_back(norm_sq(start.alpha));
        norm_b.push_back(norm_sq(start.beta));
        parent.push_back(-1);
        via.push_back(placeholder_move(start.ring()));
        index.emplace(key_of(start), 0);
        frontier.push_back(0);
    }

    // Expands one BFS layer; on_new is called for each freshly discovered
    // state and may return false to stop the whole search.
    template <typename OnNew>
    bool expand_layer(const GenSet& gens, const SearchParams& params, std::uint64_t state_budget,
                      OnNew&& on_new) {
        std::vector<std::size_t> next;
        for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
            std::size_t si = frontier[fi];
            UniPair state = visited[si];
            Int na = norm_a[si], nb = norm_b[si];
            for (int side_pass = 0; side_pass < 2; ++side_pass) {
                Side side = side_pass == 0 ? Side::Upper : Side::Lower;
                const Int& mult_norm = (side == Side::Upper) ? na : nb;
                const QuadInt& mult = (side == Side::Upper) ? state.alpha : state.beta;
                const QuadInt& moved = (side == Side::Upper) ? state.beta : state.alpha;
                const Int& moved_norm = (side == Side::Upper) ? nb : na;
                const Int& kept_norm = (side == Side::Upper) ? na : nb;
                if (is_zero(mult) || kept_norm > params.state_norm_cap) continue;
                std::size_t cut = gen_cutoff(gens, mult_norm, moved_norm, params.state_norm_cap);
                for (std::size_t gi = 0; gi < cut; ++gi) {
                    QuadInt next_entry = moved + gens.ts[gi] * mult;
                    Int nn = norm_sq(next_entry);
                    if (nn > params.state_norm_cap) continue;
                    UniPair ns = (side == Side::Upper) ? UniPair{state.alpha, next_entry}
                                                       : UniPair{next_entry, state.beta};
                    PairKey k = key_of(ns);
                    if (index.contains(k)) continue;
                    if (visited.size() >= state_budget) {
                        budget_hit = true;
                        frontier = std::move(next);
                        return false;
                    }
                    std::size_t ni = visited.size();
                    index.emplace(std::move(k), ni);
                    visited.push_back(std::move(ns));
                    if (side == Side::Upper) {
                        norm_a.push_back(na);
                        norm_b.push_back(nn);
                    } else {
                        norm_a.push_back(nn);
                        norm_b.push_back(nb);
                    }
                    parent.push_back(static_cast<std::int64_t>(si));
                    via.push_back(ElemMove{side, gens.ts[gi]});
                    next.push_back(ni);
                    if (!on_new(ni)) {
                        frontier = std::move(next);
                        return false;
                    }
                }
            }
        }
        frontier = std::move(next);
        ++depth;
        return true;
    }

    ElemWord word_to(std::size_t idx) const {
        std::vector<ElemMove> moves;
        for (std::int64_t cur = static_cast<std::int64_t>(idx); parent[cur] >= 0;
             cur = parent[cur])
            moves.push_back(via[cur]);
        std::reverse(moves.begin(), moves.end());
        return normalize_word(std::move(moves));
    }
};

}  // namespace

void validate(const SearchParams& params) {
    if (params.state_norm_cap < 1 || params.gen_norm_cap < 1 || params.max_states < 1 ||
        params.max_depth < 1)
        throw std::invalid_argument("search budgets must all be >= 1");
}

ElemWord OrbitReport::witness(std::size_t idx) const {
    std::vector<ElemMove> moves;
    for (std::int64_t cur = static_cast<std::int64_t>(idx); parent[cur] >= 0; cur = parent[cur])
        moves.push_back(via[cur]);
    std::reverse(moves.begin(), moves.end());
    return normalize_word(std::move(moves));
}

std::optional<std::size_t> OrbitReport::find(const UniPair& p) const {
    for (std::size_t i = 0; i < visited.size(); ++i)
        if (visited[i] == p) return i;
    return std::nullopt;
}

OrbitReport orbit_bfs(const UniPair& start, const SearchParams& params) {
    validate(params);
    if (!is_unimodular(start)) throw std::invalid_argument("orbit_bfs: start pair is not unimodular");

    GenSet gens = build_gens(start.ring(), params.gen_norm_cap);
    Bfs bfs(start);
    while (!bfs.frontier.empty() && bfs.depth < params.max_depth) {
        if (!bfs.expand_layer(gens, params, params.max_states, [](std::size_t) { return true; }))
            break;
    }
    if (!bfs.frontier.empty()) bfs.budget_hit = true;

    OrbitReport report;
    report.visited = std::move(bfs.visited);
    report.parent = std::move(bfs.parent);
    report.via = std::move(bfs.via);
    report.frontier_exhausted = !bfs.budget_hit;
    return report;
}

std::optional<ElemWord> pairs_equivalent(const UniPair& p, const UniPair& q,
                                         const SearchParams& params) {
    validate(params);
    if (p.ring() != q.ring()) throw RingMismatchError{};
    if (!is_unimodular(p) || !is_unimodular(q))
        throw std::invalid_argument("pairs_equivalent: inputs must be unimodular");
    if (p == q) return ElemWord{};

    GenSet gens = build_gens(p.ring(), params.gen_norm_cap);
    Bfs fwd(p), bwd(q);

    std::optional<ElemWord> found;
    auto meet = [&](const Bfs& self, const Bfs& other, bool self_is_fwd, std::size_t ni) {
        auto it = other.index.find(key_of(self.visited[ni]));
        if (it == other.index.end()) return true;
        const Bfs& f = self_is_fwd ? self : other;
        const Bfs& b = self_is_fwd ? other : self;
        std::size_t fi = self_is_fwd ? ni : it->second;
        std::size_t bi = self_is_fwd ? it->second : ni;
        // act(p, wf) = meet = act(q, wb)  =>  act(p, wf * wb^-1) = q
        ElemWord w = concat(f.word_to(fi), inverse_word(b.word_to(bi)));
        if (act_row(p, to_matrix(w, p.ring())) != q)
            throw std::logic_error("pairs_equivalent: witness verification failed");
        found = std::move(w);
        return false;
    };

    while (!found) {
        bool fwd_turn;
        if (fwd.frontier.empty() && bwd.frontier.empty()) break;
        if (fwd.frontier.empty()) fwd_turn = false;
        else if (bwd.frontier.empty()) fwd_turn = true;
        else fwd_turn = fwd.frontier.size() <= bwd.frontier.size();

        Bfs& self = fwd_turn ? fwd : bwd;
        Bfs& other = fwd_turn ? bwd : fwd;
        if (fwd.depth + bwd.depth >= params.max_depth) break;
        std::uint64_t remaining_other = other.visited.size();
        if (remaining_other >= params.max_states) break;
        std::uint64_t budget = params.max_states - remaining_other;
        if (self.visited.size() >= budget) break;
        self.expand_layer(gens, params, budget, [&](std::size_t ni) {
            return meet(self, other, fwd_turn, ni);
        });
        if (!found && self.budget_hit) break;
    }
    return found;
}

namespace {

// Exact minimizer of norm_sq(moved + t * mult) over nonzero t in the ring.
// The real-coordinate solution of -moved/mult is computed by conjugate
// division; integer candidates around it are checked exhaustively (a
// 4x4 corner grid, wide enough for both ring forms). Ties break toward
// smaller norm_sq(t), then (a, b) of t.
struct SideCandidate {
    QuadInt t;
    QuadInt moved_after;
    Int moved_norm;
    Int t_norm;
};

std::optional<SideCandidate> best_side_move(const QuadInt& moved, const QuadInt& mult) {
    if (is_zero(mult)) return std::nullopt;
    const Ring& ring = mult.ring;
    QuadInt num = -(moved * conj(mult));
    Int den = norm_sq(mult);
    Int fa = floor_div(num.a, den);
    Int fb = floor_div(num.b, den);
    std::optional<SideCandidate> best;
    for (int da = -1; da <= 2; ++da) {
        for (int db = -1; db <= 2; ++db) {
            QuadInt t = qi(ring, fa + da, fb + db);
            if (is_zero(t)) continue;
            QuadInt after = moved + t * mult;
            Int nn = norm_sq(after);
            Int tn = norm_sq(t);
            bool better = false;
            if (!best) better = true;
            else if (nn != best->moved_norm) better = nn < best->moved_norm;
            else if (tn != best->t_norm) better = tn < best->t_norm;
            else better = coord_less(t, best->t);
            if (better) best = SideCandidate{std::move(t), std::move(after), std::move(nn), std::move(tn)};
        }
    }
    return best;
}

bool is_unit_form(const UniPair& p) {
    return (is_zero(p.beta) && is_unit(p.alpha)) || (is_zero(p.alpha) && is_unit(p.beta));
}

// Word sending a unit-form pair to exactly (1, 0). Uses the S word for the
// (0, u) positions and the Whitehead-style word
// diag(v^-1, v) = U(v^-1);L(-v);U(v^-1) * U(-1);L(1);U(-1) for units v != 1.
ElemWord unit_form_fix(const UniPair& p) {
    const Ring& ring = p.ring();
    auto diag_fix = [&](const QuadInt& v) {
        QuadInt vinv = unit_inverse(v);
        QuadInt one = qi_int(ring, 1);
        return normalize_word({ElemMove{Side::Upper, vinv}, ElemMove{Side::Lower, -v},
                               ElemMove{Side::Upper, vinv}, ElemMove{Side::Upper, -one},
                               ElemMove{Side::Lower, one}, ElemMove{Side::Upper, -one}});
    };
    if (is_zero(p.beta)) {
        if (is_one(p.alpha)) return ElemWord{};
        return diag_fix(p.alpha);
    }
    const QuadInt& u = p.beta;
    if (is_one(u)) return inverse_word(s_word(ring));  // (0,1) -> (1,0)
    if (u == -qi_int(ring, 1)) return s_word(ring);    // (0,-1) -> (1,0)
    return concat(inverse_word(s_word(ring)), diag_fix(u));  // (0,u) -> (u,0) -> (1,0)
}

}  // namespace

ReductionResult reduce_pair(const UniPair& start) {
    if (is_zero(start.alpha) && is_zero(start.beta))
        throw std::invalid_argument("reduce_pair: zero pair");

    UniPair cur = start;
    std::vector<ElemMove> moves;
    while (true) {
        Int na = norm_sq(cur.alpha), nb = norm_sq(cur.beta);
        Int cur_max = std::max(na, nb), cur_min = std::min(na, nb);

        auto upper = best_side_move(cur.beta, cur.alpha);   // beta + t*alpha
        auto lower = best_side_move(cur.alpha, cur.beta);   // alpha + t*beta

        // Rank both side candidates by the resulting sorted norm pair, then
        // by the move itself (smaller t first, Upper before Lower).
        struct Ranked {
            Int mx, mn;
            SideCandidate cand;
            Side side;
        };
        std::optional<Ranked> best;
        auto consider = [&](std::optional<SideCandidate>& c, Side side, const Int& kept) {
            if (!c) return;
            Ranked r{std::max(kept, c->moved_norm), std::min(kept, c->moved_norm), *c, side};
            bool better = false;
            if (!best) better = true;
            else if (r.mx != best->mx) better = r.mx < best->mx;
            else if (r.mn != best->mn) better = r.mn < best->mn;
            else if (r.cand.t_norm != best->cand.t_norm) better = r.cand.t_norm < best->cand.t_norm;
            else if (r.cand.t != best->cand.t) better = coord_less(r.cand.t, best->cand.t);
            else better = side == Side::Upper && best->side == Side::Lower;
            if (better) best = std::move(r);
        };
        consider(upper, Side::Upper, na);
        consider(lower, Side::Lower, nb);

        if (!best) break;  // both entries zero is excluded; one side may be unusable
        if (best->mx > cur_max || (best->mx == cur_max && best->mn >= cur_min)) break;

        moves.push_back(ElemMove{best->side, best->cand.t});
        cur = (best->side == Side::Upper) ? UniPair{cur.alpha, best->cand.moved_after}
                                          : UniPair{best->cand.moved_after, cur.beta};
    }

    ReduceOutcome outcome = is_unit_form(cur) ? ReduceOutcome::Reduced : ReduceOutcome::Stalled;
    return ReductionResult{outcome, cur, normalize_word(std::move(moves))};
}

std::optional<ElemWord> matrix_in_E2(const Mat2& m, const SearchParams& params) {
    validate(params);
    if (!is_one(det(m))) throw NotUnimodularError("matrix_in_E2: determinant is not 1");

    const Ring& ring = m.ring();
    UniPair top{m.m11, m.m12};

    ElemWord to_unit_form;
    UniPair final = top;
    ReductionResult red = reduce_pair(top);
    if (red.outcome == ReduceOutcome::Reduced) {
        to_unit_form = red.word;
        final = red.final;
    } else {
        // Greedy descent stalled; fall back to the budgeted orbit window.
        OrbitReport rep = orbit_bfs(top, params);
        std::optional<std::size_t> hit;
        for (std::size_t i = 0; i < rep.visited.size(); ++i) {
            if (is_unit_form(rep.visited[i])) {
                hit = i;
                break;
            }
        }
        if (!hit) return std::nullopt;
        to_unit_form = rep.witness(*hit);
        final = rep.visited[*hit];
    }

    ElemWord w = concat(to_unit_form, unit_form_fix(final));
    // m * to_matrix(w) has top row (1, 0) and det 1, so it is a single
    // lower move; absorb it and invert.
    Mat2 residual = m * to_matrix(w, ring);
    if (!is_L2(residual)) throw std::logic_error("matrix_in_E2: residual is not lower unitriangular");
    std::vector<ElemMove> lead;
    if (!is_zero(residual.m21)) lead.push_back(ElemMove{Side::Lower, residual.m21});
    ElemWord word = concat(normalize_word(std::move(lead)), inverse_word(w));
    if (to_matrix(word, ring) != m)
        throw std::logic_error("matrix_in_E2: word verification failed");
    return word;
}

}  // namespace e2lab
