#pragma once

#include "e2lab/explorer.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace e2lab {

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(std::string_view s);

/// One re-runnable check: the claim describes what was computed, the
/// witness records the values (on failure, the exact mismatch).
struct Check {
    std::string name;
    std::string claim;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
};

/// A machine-checkable record of exact verifications. params carries
/// everything needed to re-run the suite from scratch (see rerun()).
struct Certificate {
    Ring ring;
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Check> checks;

    CheckStatus overall() const;  // Fail dominates, then Inconclusive
    bool all_pass() const { return overall() == CheckStatus::Pass; }
};

/// Exact verification of the matrix identity chain behind the explicit
/// special-pair family over Z[di]: family determinants, the specialness
/// inequalities, the S word, the conjugation / inverse / square / product
/// identities, the lower-unitriangular linkage between the two matrices
/// sharing a top row, and pairwise distinctness of the doubled classes.
/// Every comparison is exact equality; there is no tolerance anywhere.
Certificate family_certificate(const Int& d, const std::vector<Int>& n_values);

/// Randomized exact checks of the coset correspondence mechanisms between
/// L2\SL2/E2 and unimodular-pair orbits: top-row invariance under left L2
/// multiplication, the lower-unitriangular quotient of two completions of
/// one row, and completability of every generated top row.
Certificate bijection_certificate(const Ring& ring, std::uint32_t samples, std::uint64_t seed);

/// Bounded empirical scan of special-pair rigidity: inside the budget
/// window, each special pair connects to its four trivial variants by
/// verified witness words, and never to a special pair outside them.
/// Positive findings are exact; negative ones are labeled inconclusive.
/// Requires D >= 4 (the hypothesis regime); smaller D is out of scope.
Certificate rigidity_certificate(const Ring& ring, const Int& norm_cap,
                                 const SearchParams& params);

std::string certificate_json(const Certificate& cert, int indent = 2);
Certificate certificate_from_json(std::string_view text);

/// Re-executes the suite recorded in the certificate's params and returns
/// the fresh result; a sound certificate reproduces itself byte-for-byte.
Certificate rerun(const Certificate& cert);

namespace detail {
/// Test hook: adds delta to one entry of each family matrix before the
/// determinant check, to exercise the failure path.
Certificate family_certificate_tampered(const Int& d, const std::vector<Int>& n_values,
                                        const Int& delta);
}  // namespace detail

}  // namespace e2lab
