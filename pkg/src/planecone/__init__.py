"""Exact arithmetic for exceptional bundles on the projective plane.

Slopes, discriminants, and Euler characteristics are plain Fractions;
the quadratic irrationals that bound intervals and walls are QuadSurd
values, so every comparison in the package is decided exactly.
"""

from .bridgeland import (
    KIND_SEMICIRCLE,
    KIND_VERTICAL,
    TriadSlopes,
    Wall,
    bridgeland_from_mori,
    collapsing_wall,
    exceptional_pair_wall,
    kernel_cokernel_slopes,
    mori_from_bridgeland,
    nested,
    render_walls,
    wall_between,
)
from .chern import (
    ChernCharacter,
    ZeroRankError,
    discriminant,
    dual,
    euler_char,
    euler_pairing,
    exceptional_character,
    line_bundle,
    slope,
    twist,
)
from .contfrac import (
    ContinuedFraction,
    cf_expand_even,
    check_exceptional_cf,
    is_convergent_of_inverse_golden,
    is_palindrome,
)
from .exactnum import (
    QuadSurd,
    fraction_str,
    parse_fraction,
    sqrt_rational,
    surd_cmp,
    surd_value,
)
from .exceptional import (
    CantorPointError,
    DyadicAddress,
    ExceptionalSlope,
    associated_slope,
    dot,
    enumerate_slopes,
    epsilon,
    exceptional_slope_of,
    hilbert_poly,
    interval,
    is_adjacent_pair,
    parent_pair,
)
from .resolution import (
    CASE_ABOVE_DOT,
    CASE_AT_DOT,
    CASE_BELOW_DOT,
    CASE_TWO_S_GEQ,
    CASE_TWO_S_LEQ,
    ClassicalGaeta,
    KroneckerData,
    KroneckerNotApplicableError,
    ResolutionData,
    SeqTerm,
    classical_gaeta,
    classical_w_stable,
    gaeta_resolution,
    kronecker_data,
    kronecker_euler,
)
from .stability import (
    CASE_EXCEPTIONAL_BUNDLE,
    CASE_NON_EXCEPTIONAL,
    CASE_TRIANGULAR_MINUS_ONE,
    MinSlopeResult,
    delta,
    gamma,
    gamma_inv,
    height,
    min_slope,
    moduli_nonempty,
)
from .verify import CheckResult, format_report, run_suite

__version__ = "0.1.0"

__all__ = [
    "CASE_ABOVE_DOT",
    "CASE_AT_DOT",
    "CASE_BELOW_DOT",
    "CASE_EXCEPTIONAL_BUNDLE",
    "CASE_NON_EXCEPTIONAL",
    "CASE_TRIANGULAR_MINUS_ONE",
    "CASE_TWO_S_GEQ",
    "CASE_TWO_S_LEQ",
    "CantorPointError",
    "ChernCharacter",
    "CheckResult",
    "ClassicalGaeta",
    "ContinuedFraction",
    "DyadicAddress",
    "ExceptionalSlope",
    "KIND_SEMICIRCLE",
    "KIND_VERTICAL",
    "KroneckerData",
    "KroneckerNotApplicableError",
    "MinSlopeResult",
    "QuadSurd",
    "ResolutionData",
    "SeqTerm",
    "TriadSlopes",
    "Wall",
    "ZeroRankError",
    "associated_slope",
    "bridgeland_from_mori",
    "cf_expand_even",
    "check_exceptional_cf",
    "classical_gaeta",
    "classical_w_stable",
    "collapsing_wall",
    "delta",
    "discriminant",
    "dot",
    "dual",
    "enumerate_slopes",
    "epsilon",
    "euler_char",
    "euler_pairing",
    "exceptional_character",
    "exceptional_pair_wall",
    "exceptional_slope_of",
    "format_report",
    "fraction_str",
    "gaeta_resolution",
    "gamma",
    "gamma_inv",
    "height",
    "hilbert_poly",
    "interval",
    "is_adjacent_pair",
    "is_convergent_of_inverse_golden",
    "is_palindrome",
    "kernel_cokernel_slopes",
    "kronecker_data",
    "kronecker_euler",
    "line_bundle",
    "min_slope",
    "moduli_nonempty",
    "mori_from_bridgeland",
    "nested",
    "parent_pair",
    "parse_fraction",
    "render_walls",
    "run_suite",
    "slope",
    "sqrt_rational",
    "surd_cmp",
    "surd_value",
    "twist",
    "wall_between",
]
