#pragma once

#include "e2lab/linalg.hpp"

#include <array>
#include <optional>
#include <vector>

namespace e2lab {

/// A det-1 matrix whose top row is the completed pair.
struct Completion {
    Mat2 m;

    friend bool operator==(const Completion&, const Completion&) = default;
};

/// Decides whether 1 lies in the ideal (alpha, beta) and, if so, produces a
/// completion [[alpha, beta], [-y, x]] with alpha*x + beta*y = 1.
///
/// The decision is exact: the Z-lattice spanned by alpha, w*alpha, beta,
/// w*beta (coordinates in the basis {1, w}) is put into Hermite normal form
/// with transformation bookkeeping; the pair is unimodular iff that lattice
/// is all of Z^2, and the transformation row for (1, 0) yields x and y.
/// Absence is a valid answer, not an error.
std::optional<Completion> complete_pair(const UniPair& p);

bool is_unimodular(const UniPair& p);

/// Norm shape of a special pair, without the unimodularity requirement:
/// norm_sq(alpha) = norm_sq(beta), strictly below norm_sq(alpha +- beta).
/// Diagnostic helper; is_special is the real predicate.
bool has_special_norms(const UniPair& p);

/// Special pair: unimodular with |alpha| = |beta| < |alpha +- beta|
/// (squared norms throughout).
bool is_special(const UniPair& p);

/// The explicit family over Z[di]: for d >= 2 and d | n, the pair
/// (1+n+ni, 1+n-ni) together with its det-1 completion
/// [[1+n+ni, 1+n-ni], [n, 1-ni]]. Special whenever n > 1.
struct SpecialFamilyEntry {
    UniPair pair;
    Completion completion;
};

SpecialFamilyEntry special_family(const Int& d, const Int& n);

/// The four pairs (a,b), (b,-a), (-a,-b), (-b,a); mutually E2-equivalent
/// via powers of [[0,1],[-1,0]].
std::array<UniPair, 4> trivial_variants(const UniPair& p);
bool is_trivial_variant(const UniPair& p, const UniPair& q);

/// All special pairs with norm_sq(alpha) <= norm_cap, sorted by
/// (norm_sq(alpha), alpha coords, beta coords). Exhaustive over the norm
/// disc; duplicate-free; closed under the variant map.
std::vector<UniPair> enumerate_special(const Ring& ring, const Int& norm_cap);

/// All nonzero x with norm_sq(x) <= cap, sorted by (norm_sq, a, b).
std::vector<QuadInt> elements_with_norm_up_to(const Ring& ring, const Int& cap);

}  // namespace e2lab
