"""Exact arithmetic, unimodular pairs, and bounded E2-orbit search over
imaginary quadratic orders."""

from e2lab._core import (  # noqa: F401
    Certificate,
    Check,
    CheckStatus,
    Completion,
    ElemMove,
    ElemWord,
    Form,
    Mat2,
    OrbitReport,
    PellSolution,
    QuadInt,
    ReduceOutcome,
    ReductionResult,
    Ring,
    SearchParams,
    Side,
    SpecialFamilyEntry,
    UniPair,
    act_row,
    bijection_certificate,
    certificate_from_json,
    complete_pair,
    concat,
    conj,
    det,
    elem_matrix,
    elements_with_norm_up_to,
    enumerate_special,
    family_certificate,
    gaussian_order,
    half_to_sqrt_partner,
    has_special_norms,
    identity,
    inv_sl2,
    inverse_word,
    is_L2,
    is_special,
    is_trivial_variant,
    is_unimodular,
    is_unit,
    make_ring,
    matrix_in_E2,
    norm_sq,
    normalize_word,
    orbit_bfs,
    pairs_equivalent,
    parse_mat2,
    parse_pair,
    parse_quadint,
    parse_ring,
    parse_word,
    pell_fundamental,
    qi,
    reduce_pair,
    rerun,
    rigidity_certificate,
    s_matrix,
    s_word,
    special_family,
    to_matrix,
    trivial_variants,
)

__version__ = "0.1.0"
