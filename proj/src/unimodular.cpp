#include "e2lab/unimodular.hpp"

#include <algorithm>
#include <map>

namespace e2lab {

namespace {

// Coordinates of w*x in the basis {1, w}.
//   Sqrt: w(a+bw) = -Db + aw
//   Half: w(a+bw) = -Db + (a+b)w
std::array<Int, 2> omega_times(const Ring& ring, const Int& a, const Int& b) {
    if (ring.form == Form::Sqrt) return {-ring.D * b, a};
    return {-ring.D * b, a + b};
}

struct HnfResult {
    std::array<std::array<Int, 2>, 4> m;  // reduced rows
    std::array<std::array<Int, 4>, 4> u;  // transform: u * input = m
    int rank = 0;
};

// Row-style HNF of a 4x2 integer matrix with unimodular transform
// bookkeeping. Pivots are positive and entries above a pivot are reduced
// into [0, pivot).
HnfResult hnf_4x2(std::array<std::array<Int, 2>, 4> m) {
    HnfResult res;
    res.m = std::move(m);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) res.u[i][j] = (i == j) ? 1 : 0;

    auto row_sub = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < 2; ++c) res.m[dst][c] -= q * res.m[src][c];
        for (int c = 0; c < 4; ++c) res.u[dst][c] -= q * res.u[src][c];
    };
    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        std::swap(res.m[i], res.m[j]);
        std::swap(res.u[i], res.u[j]);
    };
    auto row_negate = [&](int i) {
        for (int c = 0; c < 2; ++c) res.m[i][c] = -res.m[i][c];
        for (int c = 0; c < 4; ++c) res.u[i][c] = -res.u[i][c];
    };

    int r = 0;
    for (int col = 0; col < 2 && r < 4; ++col) {
        // Repeated smallest-pivot elimination below row r.
        while (true) {
            int best = -1;
            for (int j = r; j < 4; ++j) {
                if (res.m[j][col] == 0) continue;
                if (best < 0 || abs(res.m[j][col]) < abs(res.m[best][col])) best = j;
            }
            if (best < 0) break;
            row_swap(r, best);
            bool clean = true;
            for (int j = r + 1; j < 4; ++j) {
                if (res.m[j][col] == 0) continue;
                row_sub(j, r, res.m[j][col] / res.m[r][col]);  // truncated: |rem| < |pivot|
                if (res.m[j][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (res.m[r][col] != 0) {
            if (res.m[r][col] < 0) row_negate(r);
            for (int i = 0; i < r; ++i) row_sub(i, r, floor_div(res.m[i][col], res.m[r][col]));
            ++r;
        }
    }
    res.rank = r;
    return res;
}

Int norm_from_coords(const Ring& ring, const Int& a, const Int& b) {
    if (ring.form == Form::Sqrt) return a * a + ring.D * b * b;
    return a * a + a * b + ring.D * b * b;
}

}  // namespace

std::optional<Completion> complete_pair(const UniPair& p) {
    const Ring& ring = p.ring();
    std::array<std::array<Int, 2>, 4> rows;
    rows[0] = {p.alpha.a, p.alpha.b};
    rows[1] = omega_times(ring, p.alpha.a, p.alpha.b);
    rows[2] = {p.beta.a, p.beta.b};
    rows[3] = omega_times(ring, p.beta.a, p.beta.b);

    HnfResult h = hnf_4x2(std::move(rows));
    // The ideal (alpha, beta) contains 1 iff its coordinate lattice is all
    // of Z^2, i.e. the HNF is the identity.
    if (h.rank != 2 || h.m[0][0] != 1 || h.m[1][1] != 1) return std::nullopt;
    // Row 0 of the transform expresses (1, 0) over [alpha, w*alpha, beta, w*beta].
    QuadInt x = qi(ring, h.u[0][0], h.u[0][1]);
    QuadInt y = qi(ring, h.u[0][2], h.u[0][3]);
    Mat2 m = mat2(p.alpha, p.beta, -y, x);
    return Completion{std::move(m)};
}

bool is_unimodular(const UniPair& p) {
    return complete_pair(p).has_value();
}

bool has_special_norms(const UniPair& p) {
    Int n = norm_sq(p.alpha);
    if (norm_sq(p.beta) != n) return false;
    return n < norm_sq(p.alpha + p.beta) && n < norm_sq(p.alpha - p.beta);
}

bool is_special(const UniPair& p) {
    return has_special_norms(p) && is_unimodular(p);
}

SpecialFamilyEntry special_family(const Int& d, const Int& n) {
    if (d < 2) throw OutOfScopeRingError("special_family: requires Z[di] with d >= 2");
    if (n < 1) throw std::invalid_argument("special_family: n must be >= 1");
    if (n % d != 0)
        throw std::invalid_argument("special_family: d must divide n, entries would leave Z[di]");
    Ring ring = gaussian_order(d);
    Int k = n / d;  // ni = k*w with w = di
    QuadInt alpha = qi(ring, 1 + n, k);
    QuadInt beta = qi(ring, 1 + n, -k);
    Mat2 m = mat2(alpha, beta, qi_int(ring, n), qi(ring, 1, -k));
    return SpecialFamilyEntry{UniPair{alpha, beta}, Completion{std::move(m)}};
}

std::array<UniPair, 4> trivial_variants(const UniPair& p) {
    return {UniPair{p.alpha, p.beta}, UniPair{p.beta, -p.alpha}, UniPair{-p.alpha, -p.beta},
            UniPair{-p.beta, p.alpha}};
}

bool is_trivial_variant(const UniPair& p, const UniPair& q) {
    for (const auto& v : trivial_variants(p))
        if (v == q) return true;
    return false;
}

std::vector<QuadInt> elements_with_norm_up_to(const Ring& ring, const Int& cap) {
    std::vector<std::pair<Int, QuadInt>> decorated;
    if (cap >= 1) {
        if (ring.form == Form::Sqrt) {
            Int bmax = isqrt(floor_div(cap, ring.D));
            for (Int b = -bmax; b <= bmax; ++b) {
                Int amax = isqrt(cap - ring.D * b * b);
                for (Int a = -amax; a <= amax; ++a) {
                    if (a == 0 && b == 0) continue;
                    decorated.emplace_back(norm_from_coords(ring, a, b), qi(ring, a, b));
                }
            }
        } else {
            // a^2 + ab + D b^2 <= cap  <=>  (2a+b)^2 <= 4cap - (4D-1) b^2
            Int q = 4 * ring.D - 1;
            Int bmax = isqrt(floor_div(4 * cap, q));
            for (Int b = -bmax; b <= bmax; ++b) {
                Int disc = 4 * cap - q * b * b;
                if (disc < 0) continue;
                Int s = isqrt(disc);
                Int lo = floor_div(-b - s + 1, 2);  // ceil((-b-s)/2)
                Int hi = floor_div(-b + s, 2);
                for (Int a = lo; a <= hi; ++a) {
                    if (a == 0 && b == 0) continue;
                    Int n = norm_from_coords(ring, a, b);
                    if (n <= cap) decorated.emplace_back(std::move(n), qi(ring, a, b));
                }
            }
        }
    }
    std::sort(decorated.begin(), decorated.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.first != rhs.first) return lhs.first < rhs.first;
        return coord_less(lhs.second, rhs.second);
    });
    std::vector<QuadInt> out;
    out.reserve(decorated.size());
    for (auto& [n, x] : decorated) out.push_back(std::move(x));
    return out;
}

std::vector<UniPair> enumerate_special(const Ring& ring, const Int& norm_cap) {
    if (norm_cap < 1) return {};
    std::vector<QuadInt> elems = elements_with_norm_up_to(ring, norm_cap);

    std::vector<UniPair> out;
    std::size_t lo = 0;
    while (lo < elems.size()) {
        Int n = norm_sq(elems[lo]);
        std::size_t hi = lo;
        while (hi < elems.size() && norm_sq(elems[hi]) == n) ++hi;
        // Equal-norm class [lo, hi); both entries must come from it.
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = lo; j < hi; ++j) {
                UniPair p{elems[i], elems[j]};
                if (has_special_norms(p) && is_unimodular(p)) out.push_back(std::move(p));
            }
        }
        lo = hi;
    }
    return out;  // class-by-class ascending norm, coordinate order inside
}

}  // namespace e2lab
