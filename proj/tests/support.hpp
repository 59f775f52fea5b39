#pragma once

#include "e2lab/explorer.hpp"

#include <optional>
#include <random>
#include <vector>

// Test-side helpers and independent oracles. Everything here stays off the
// implementation paths it is used to check: the Pell oracle is a plain
// square scan, the completion oracle solves a*d - b*g = 1 by enumeration
// and exact division, never touching the lattice normal form.
namespace e2lab::testing {

inline std::vector<Ring> standard_rings() {
    return {make_ring(Form::Sqrt, 1), make_ring(Form::Sqrt, 2), make_ring(Form::Sqrt, 4),
            make_ring(Form::Sqrt, 5), make_ring(Form::Half, 1), make_ring(Form::Half, 2),
            make_ring(Form::Half, 3)};
}

// Minimal y >= 1 with 1 + D y^2 a perfect square; y_limit bounds the scan.
inline std::optional<PellSolution> brute_pell(const Int& D, long y_limit = 2000000) {
    for (Int y = 1; y <= y_limit; ++y) {
        Int rhs = 1 + D * y * y;
        Int x = isqrt(rhs);
        if (x * x == rhs) return PellSolution{x, y};
    }
    return std::nullopt;
}

// Some (gamma, delta), both with norm_sq <= search_cap, solving
// alpha*delta - beta*gamma = 1; absent if none exists in that box.
inline std::optional<Mat2> brute_complete(const UniPair& p, const Int& search_cap = 100) {
    const Ring& ring = p.ring();
    std::vector<QuadInt> box = elements_with_norm_up_to(ring, search_cap);
    box.insert(box.begin(), qi_int(ring, 0));
    QuadInt one = qi_int(ring, 1);
    if (is_zero(p.alpha)) {
        // -beta*gamma = 1 needs beta to be a unit.
        if (!is_unit(p.beta)) return std::nullopt;
        return mat2(p.alpha, p.beta, -unit_inverse(p.beta), qi_int(ring, 0));
    }
    for (const QuadInt& g : box) {
        auto delta = divide_exact(one + p.beta * g, p.alpha);
        if (delta && norm_sq(*delta) <= search_cap) return mat2(p.alpha, p.beta, g, *delta);
    }
    return std::nullopt;
}

struct Rand {
    std::mt19937_64 rng;

    explicit Rand(std::uint64_t seed) : rng(seed) {}

    std::uint64_t below(std::uint64_t n) { return rng() % n; }

    QuadInt element(const std::vector<QuadInt>& pool) { return pool[below(pool.size())]; }

    ElemWord word(const std::vector<QuadInt>& pool, std::size_t max_len) {
        std::vector<ElemMove> moves;
        std::size_t len = 1 + below(max_len);
        for (std::size_t i = 0; i < len; ++i)
            moves.push_back(ElemMove{below(2) == 0 ? Side::Upper : Side::Lower, element(pool)});
        return normalize_word(std::move(moves));
    }
};

}  // namespace e2lab::testing
