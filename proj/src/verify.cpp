#include "e2lab/verify.hpp"

#include <json.hpp>

#include <random>

namespace e2lab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string comma_join(const std::vector<Int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i].str();
    }
    return out;
}

std::vector<Int> comma_split(std::string_view text) {
    std::vector<Int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        if (comma > start) out.emplace_back(std::string(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

const std::string& find_param(const Certificate& cert, const std::string& key) {
    for (const auto& [k, v] : cert.params)
        if (k == key) return v;
    throw std::invalid_argument("certificate is missing parameter: " + key);
}

void push_check(Certificate& cert, std::string name, std::string claim, bool pass,
                std::string witness) {
    cert.checks.push_back(Check{std::move(name), std::move(claim),
                                pass ? CheckStatus::Pass : CheckStatus::Fail,
                                std::move(witness)});
}

std::string mat_eq_witness(const Mat2& lhs, const Mat2& rhs) {
    return "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Inconclusive: return "INCONCLUSIVE";
    }
    throw std::logic_error("unreachable");
}

CheckStatus check_status_from_string(std::string_view s) {
    if (s == "PASS") return CheckStatus::Pass;
    if (s == "FAIL") return CheckStatus::Fail;
    if (s == "INCONCLUSIVE") return CheckStatus::Inconclusive;
    throw std::invalid_argument("unknown check status: " + std::string(s));
}

CheckStatus Certificate::overall() const {
    CheckStatus out = CheckStatus::Pass;
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
        if (c.status == CheckStatus::Inconclusive) out = CheckStatus::Inconclusive;
    }
    return out;
}

Certificate family_certificate(const Int& d, const std::vector<Int>& n_values) {
    return detail::family_certificate_tampered(d, n_values, 0);
}

namespace detail {

Certificate family_certificate_tampered(const Int& d, const std::vector<Int>& n_values,
                                        const Int& delta) {
    if (d < 2) throw OutOfScopeRingError("family certificate: requires Z[di] with d >= 2");
    for (const Int& n : n_values) {
        if (n < 1) throw std::invalid_argument("family certificate: n must be >= 1");
        if (n % d != 0) throw std::invalid_argument("family certificate: every n must be divisible by d");
    }

    Ring ring = gaussian_order(d);
    Certificate cert;
    cert.ring = ring;
    cert.suite = "family";
    cert.params = {{"d", d.str()}, {"n", comma_join(n_values)}};

    const Mat2 S = s_matrix(ring);
    const Mat2 Sinv = inv_sl2(S);
    const ElemWord Sw = s_word(ring);

    {
        Mat2 prod = to_matrix(Sw, ring);
        push_check(cert, "s-word",
                   "the rotation [[0,1],[-1,0]] is the product of a length-3 elementary word, "
                   "hence lies in E2",
                   prod == S,
                   "word " + to_string(Sw) + " (this tool's choice of witness word) -> " +
                       to_string(prod));
    }

    auto nm = [&](const char* base, const Int& n) { return std::string(base) + "[n=" + n.str() + "]"; };

    for (const Int& n : n_values) {
        Int k = n / d;
        std::string ns = n.str();

        SpecialFamilyEntry fam = special_family(d, n);
        Mat2 fam_matrix = fam.completion.m;
        if (delta != 0) fam_matrix.m11.a += delta;  // test hook

        {
            QuadInt dv = det(fam_matrix);
            push_check(cert, nm("family-det", n),
                       "det [[1+n+ni, 1+n-ni], [n, 1-ni]] = 1 at n=" + ns, is_one(dv),
                       "det " + to_string(fam_matrix) + " = " + to_string(dv));
        }
        {
            const QuadInt& a = fam.pair.alpha;
            const QuadInt& b = fam.pair.beta;
            Int expect = (1 + n) * (1 + n) + n * n;
            Int na = norm_sq(a), nb = norm_sq(b);
            Int nsum = norm_sq(a + b), ndiff = norm_sq(a - b);
            bool ok = na == expect && nb == expect && nsum == (2 + 2 * n) * (2 + 2 * n) &&
                      ndiff == (2 * n) * (2 * n) && nsum > expect && ndiff > expect;
            push_check(cert, nm("special-norms", n),
                       "|1+n+ni|^2 = |1+n-ni|^2 = (1+n)^2+n^2, strictly below |sum|^2 = (2+2n)^2 "
                       "and |diff|^2 = (2n)^2, at n=" + ns,
                       ok,
                       "|a|^2=" + na.str() + " |b|^2=" + nb.str() + " |a+b|^2=" + nsum.str() +
                           " |a-b|^2=" + ndiff.str());
        }

        Mat2 Mn = mat2(qi(ring, 1, -k), qi_int(ring, -n), qi_int(ring, -n), qi(ring, 1, k));
        Mat2 Pn = mat2(qi(ring, 1, k), qi_int(ring, n), qi_int(ring, n), qi(ring, 1, -k));
        Mat2 M2n = mat2(qi(ring, 1, -2 * k), qi_int(ring, -2 * n), qi_int(ring, -2 * n),
                        qi(ring, 1, 2 * k));
        Mat2 Qn = mat2(qi(ring, 1, -2 * k), qi_int(ring, -2 * n), qi(ring, -1 - 2 * n, 2 * k),
                       qi(ring, 1 + 2 * n, 2 * k));
        Mat2 F2n = special_family(d, 2 * n).completion.m;

        {
            Mat2 lhs = S * Mn * Sinv;
            push_check(cert, nm("conjugation-identity", n),
                       "S [[1-ni,-n],[-n,1+ni]] S^-1 = [[1+ni,n],[n,1-ni]] at n=" + ns, lhs == Pn,
                       mat_eq_witness(lhs, Pn));
        }
        {
            QuadInt dv = det(Pn);
            bool ok = is_one(dv) && inv_sl2(Pn) == Mn;
            push_check(cert, nm("inverse-identity", n),
                       "[[1-ni,-n],[-n,1+ni]] is the inverse of [[1+ni,n],[n,1-ni]] at n=" + ns, ok,
                       is_one(dv) ? mat_eq_witness(inv_sl2(Pn), Mn)
                                  : "det " + to_string(Pn) + " = " + to_string(dv));
        }
        {
            Mat2 lhs = Mn * Mn;
            push_check(cert, nm("square-identity", n),
                       "[[1-ni,-n],[-n,1+ni]]^2 = [[1-2ni,-2n],[-2n,1+2ni]] at n=" + ns,
                       lhs == M2n, mat_eq_witness(lhs, M2n));
        }
        {
            Mat2 lhs = Sinv * Qn * S;
            push_check(cert, nm("product-identity", n),
                       "S^-1 [[1-2ni,-2n],[-1-2n+2ni,1+2n+2ni]] S = "
                       "[[1+2n+2ni,1+2n-2ni],[2n,1-2ni]] at n=" + ns,
                       lhs == F2n, mat_eq_witness(lhs, F2n));
        }
        {
            QuadInt dv = det(Qn);
            bool ok = is_one(dv);
            std::string witness;
            if (ok) {
                Mat2 quotient = M2n * inv_sl2(Qn);
                ok = is_L2(quotient);
                witness = "A B^-1 = " + to_string(quotient);
            } else {
                witness = "det " + to_string(Qn) + " = " + to_string(dv);
            }
            push_check(cert, nm("l2-linkage", n),
                       "the two det-1 matrices sharing the top row (1-2ni, -2n) differ by a left "
                       "lower-unitriangular factor at n=" + ns,
                       ok, witness);
        }
        {
            UniPair doubled = special_family(d, 2 * n).pair;
            bool ok = true;
            std::string offender;
            for (const Int& other : n_values) {
                if (other == n) continue;
                UniPair other_doubled = special_family(d, 2 * other).pair;
                if (is_trivial_variant(doubled, other_doubled)) {
                    ok = false;
                    offender = other.str();
                    break;
                }
            }
            push_check(cert, nm("class-distinct", n),
                       "(1+2n+2ni, 1+2n-2ni) is not a trivial variant of the pair for any other n "
                       "in the list, at n=" + ns,
                       ok,
                       ok ? "distinct from " + std::to_string(n_values.size() - 1) + " other pairs"
                          : "collides with n'=" + offender);
        }
    }
    return cert;
}

}  // namespace detail

Certificate bijection_certificate(const Ring& ring, std::uint32_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("bijection certificate: samples must be >= 1");

    Certificate cert;
    cert.ring = ring;
    cert.suite = "bijection";
    cert.params = {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}};

    // Bounded random SL2 elements: words of length <= 8 with small
    // parameters, times random lower-unitriangular factors.
    std::vector<QuadInt> pool = elements_with_norm_up_to(ring, 9);
    std::mt19937_64 rng(seed);
    auto random_t = [&]() { return pool[rng() % pool.size()]; };
    auto random_word = [&]() {
        std::vector<ElemMove> moves;
        std::size_t len = 1 + rng() % 8;
        for (std::size_t i = 0; i < len; ++i)
            moves.push_back(ElemMove{(rng() % 2 == 0) ? Side::Upper : Side::Lower, random_t()});
        return normalize_word(std::move(moves));
    };
    auto random_l2 = [&]() {
        std::size_t idx = rng() % (pool.size() + 1);
        QuadInt g = (idx == pool.size()) ? qi_int(ring, 0) : pool[idx];
        return mat2(qi_int(ring, 1), qi_int(ring, 0), g, qi_int(ring, 1));
    };

    std::uint32_t pass_a = 0, pass_b = 0, pass_c = 0;
    std::string fail_a, fail_b, fail_c;
    for (std::uint32_t i = 0; i < samples; ++i) {
        Mat2 m = to_matrix(random_word(), ring);
        Mat2 l = random_l2();
        Mat2 lm = l * m;

        if (lm.m11 == m.m11 && lm.m12 == m.m12) ++pass_a;
        else if (fail_a.empty()) fail_a = "L=" + to_string(l) + " M=" + to_string(m);

        if (is_L2(m * inv_sl2(lm))) ++pass_b;
        else if (fail_b.empty()) fail_b = "M (LM)^-1 = " + to_string(m * inv_sl2(lm));

        UniPair top{m.m11, m.m12};
        auto comp = complete_pair(top);
        bool ok_c = comp && is_one(det(comp->m)) && comp->m.m11 == top.alpha &&
                    comp->m.m12 == top.beta;
        if (ok_c) ++pass_c;
        else if (fail_c.empty()) fail_c = "top row " + to_string(top);
    }

    auto tally = [&](std::uint32_t passed, const std::string& first_fail) {
        std::string w = std::to_string(passed) + "/" + std::to_string(samples) + " samples";
        if (!first_fail.empty()) w += "; first failure: " + first_fail;
        return w;
    };
    push_check(cert, "top-row-invariance",
               "left multiplication by a lower-unitriangular factor preserves the top row exactly",
               pass_a == samples, tally(pass_a, fail_a));
    push_check(cert, "l2-quotient",
               "two det-1 matrices sharing a top row differ by a left lower-unitriangular factor",
               pass_b == samples, tally(pass_b, fail_b));
    push_check(cert, "row-completability",
               "every generated top row is completed to a det-1 matrix by the lattice method",
               pass_c == samples, tally(pass_c, fail_c));
    return cert;
}

Certificate rigidity_certificate(const Ring& ring, const Int& norm_cap,
                                 const SearchParams& params) {
    if (ring.D < 4)
        throw OutOfScopeRingError("rigidity scan: hypothesis requires D >= 4 (got D = " +
                                  ring.D.str() + ")");
    if (norm_cap < 1) throw std::invalid_argument("rigidity scan: norm cap must be >= 1");
    validate(params);

    Certificate cert;
    cert.ring = ring;
    cert.suite = "rigidity";
    cert.params = {{"cap", norm_cap.str()},
                   {"state_cap", params.state_norm_cap.str()},
                   {"gen_cap", params.gen_norm_cap.str()},
                   {"max_states", std::to_string(params.max_states)},
                   {"max_depth", std::to_string(params.max_depth)}};

    std::vector<UniPair> specials = enumerate_special(ring, norm_cap);
    push_check(cert, "special-pairs-found",
               "exhaustive scan of the norm disc for special pairs with norm_sq <= " +
                   norm_cap.str(),
               true, std::to_string(specials.size()) + " special pairs");

    std::vector<bool> covered(specials.size(), false);
    auto index_of = [&](const UniPair& p) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < specials.size(); ++i)
            if (specials[i] == p) return i;
        return std::nullopt;
    };

    for (std::size_t i = 0; i < specials.size(); ++i) {
        if (covered[i]) continue;
        const UniPair p = specials[i];
        std::string ptxt = to_string(p);
        auto vars = trivial_variants(p);

        bool closure_ok = true;
        for (const auto& v : vars) {
            auto vi = index_of(v);
            if (vi) covered[*vi] = true;
            else closure_ok = false;
        }
        push_check(cert, "variant-closure[p=" + ptxt + "]",
                   "all four trivial variants of a special pair are special and inside the cap",
                   closure_ok, closure_ok ? "quadruple present" : "a variant is missing");

        for (const auto& v : vars) {
            if (v == p) continue;
            std::string name = "variants-connected[p=" + ptxt + "][q=" + to_string(v) + "]";
            std::string claim = "a verified elementary word maps the pair onto its trivial variant";
            auto word = pairs_equivalent(p, v, params);
            if (word) {
                cert.checks.push_back(Check{name, claim, CheckStatus::Pass,
                                            "word " + to_string(*word) + " (verified exactly)"});
            } else {
                cert.checks.push_back(Check{name, claim, CheckStatus::Inconclusive,
                                            "no word found within the budget window"});
            }
        }

        OrbitReport rep = orbit_bfs(p, params);
        std::optional<std::size_t> violation;
        std::optional<std::size_t> violation_state;
        for (std::size_t j = 0; j < specials.size() && !violation; ++j) {
            if (is_trivial_variant(p, specials[j])) continue;
            if (auto at = rep.find(specials[j])) {
                violation = j;
                violation_state = at;
            }
        }
        std::string name = "class-separation[p=" + ptxt + "]";
        std::string claim =
            "the budgeted orbit window around a special pair contains no special pair beyond its "
            "four trivial variants";
        if (violation) {
            cert.checks.push_back(
                Check{name, claim, CheckStatus::Fail,
                      "reached " + to_string(specials[*violation]) + " via word " +
                          to_string(rep.witness(*violation_state))});
        } else {
            cert.checks.push_back(
                Check{name, claim, CheckStatus::Pass,
                      "no cross-class pair among " + std::to_string(rep.visited.size()) +
                          " visited states; exhausted=" +
                          (rep.frontier_exhausted ? std::string("true") : std::string("false")) +
                          "; negative evidence is budget-bounded, not a proof"});
        }
    }
    return cert;
}

std::string certificate_json(const Certificate& cert, int indent) {
    ordered_json j;
    j["ring"] = to_string(cert.ring);
    j["suite"] = cert.suite;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : cert.params) params[k] = v;
    j["params"] = std::move(params);
    ordered_json checks = ordered_json::array();
    for (const auto& c : cert.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["claim"] = c.claim;
        jc["status"] = to_string(c.status);
        jc["witness"] = c.witness;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    j["overall"] = to_string(cert.overall());
    return indent >= 0 ? j.dump(indent) : j.dump();
}

Certificate certificate_from_json(std::string_view text) {
    ordered_json j = ordered_json::parse(text);
    Certificate cert;
    cert.ring = parse_ring(j.at("ring").get<std::string>());
    cert.suite = j.at("suite").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        cert.params.emplace_back(k, v.get<std::string>());
    for (const auto& jc : j.at("checks")) {
        cert.checks.push_back(Check{jc.at("name").get<std::string>(),
                                    jc.at("claim").get<std::string>(),
                                    check_status_from_string(jc.at("status").get<std::string>()),
                                    jc.at("witness").get<std::string>()});
    }
    return cert;
}

Certificate rerun(const Certificate& cert) {
    if (cert.suite == "family") {
        Int d(find_param(cert, "d"));
        return family_certificate(d, comma_split(find_param(cert, "n")));
    }
    if (cert.suite == "bijection") {
        return bijection_certificate(
            cert.ring, static_cast<std::uint32_t>(std::stoul(find_param(cert, "samples"))),
            std::stoull(find_param(cert, "seed")));
    }
    if (cert.suite == "rigidity") {
        SearchParams params;
        params.state_norm_cap = Int(find_param(cert, "state_cap"));
        params.gen_norm_cap = Int(find_param(cert, "gen_cap"));
        params.max_states = std::stoull(find_param(cert, "max_states"));
        params.max_depth = std::stoull(find_param(cert, "max_depth"));
        return rigidity_certificate(cert.ring, Int(find_param(cert, "cap")), params);
    }
    throw std::invalid_argument("unknown certificate suite: " + cert.suite);
}

}  // namespace e2lab
