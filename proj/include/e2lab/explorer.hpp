#pragma once

#include "e2lab/unimodular.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace e2lab {

/// Budgets for bounded searches over the right E2-action.
struct SearchParams {
    Int state_norm_cap = 400;        // max norm_sq of either pair entry
    Int gen_norm_cap = 16;           // max norm_sq of a move parameter t
    std::uint64_t max_states = 50000;
    std::uint64_t max_depth = 30;
};

void validate(const SearchParams& params);

/// Bounded breadth-first closure of a pair under right multiplication by
/// elementary matrices. visited[0] is the start; discovery order is
/// deterministic (layer by layer, generators sorted by (norm_sq(t), a, b)
/// with Upper tried before Lower). frontier_exhausted is true iff the
/// search closed inside the norm window rather than hitting max_states or
/// max_depth.
struct OrbitReport {
    std::vector<UniPair> visited;
    bool frontier_exhausted = false;

    /// Word mapping the start pair onto visited[idx], exactly.
    ElemWord witness(std::size_t idx) const;
    std::optional<std::size_t> find(const UniPair& p) const;

    // parent links; parent[0] = -1 and via[0] is an unused placeholder
    std::vector<std::int64_t> parent;
    std::vector<ElemMove> via;
};

OrbitReport orbit_bfs(const UniPair& start, const SearchParams& params);

/// Bidirectional bounded search for a word w with act_row(p, w) = q.
/// A returned word is verified exactly before being handed back; absence
/// is inconclusive (budget-bounded), never a proof.
std::optional<ElemWord> pairs_equivalent(const UniPair& p, const UniPair& q,
                                         const SearchParams& params);

enum class ReduceOutcome { Reduced, Stalled };

struct ReductionResult {
    ReduceOutcome outcome;
    UniPair final;
    ElemWord word;  // act_row(start, to_matrix(word)) == final
};

/// Exact greedy descent: at each step the candidate move per side is the
/// exact minimizer of the modified entry's norm (closest-vector rounding
/// through conjugate division, corner candidates checked exhaustively);
/// the better side is applied while the sorted norm pair (max, min)
/// strictly decreases lexicographically. Reduced means the final pair is
/// (u, 0) or (0, u) with u a unit.
ReductionResult reduce_pair(const UniPair& start);

/// Budgeted E2-membership for det-1 matrices: greedy reduction of the top
/// row, falling back to orbit search inside the given budgets; a returned
/// word w satisfies to_matrix(w) == m exactly. Absence is inconclusive.
std::optional<ElemWord> matrix_in_E2(const Mat2& m, const SearchParams& params);

}  // namespace e2lab
