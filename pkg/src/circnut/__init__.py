"""Exact certification of circulant nut graphs.

A nut graph has adjacency eigenvalue 0 with multiplicity one and a kernel
vector with no zero entries.  For circulant graphs the whole question
reduces to exact integer polynomial arithmetic: eigenvalues are values of
an integer polynomial at roots of unity, so vanishing eigenvalues are
cyclotomic divisors.  This package decides nut-ness for a fixed order,
certifies generator sets for all admissible orders at once, cross-checks
every verdict against an exact linear-algebra oracle, and searches for
universal generator sets among near-consecutive families.
"""

from .circulant import (
    APPENDIX_B,
    CYCLOTOMIC_WITNESS,
    GENERATOR_TOO_LARGE,
    HALF_ORDER_GENERATOR,
    NUT,
    ODD_ORDER,
    UNBALANCED_PARITY,
    GeneratorSet,
    NutVerdict,
    UniversalityReport,
    appendix_table,
    gap_set,
    is_nut,
    is_universal,
    pstar,
    pstar_table,
    q_poly,
    rep_poly,
    zero_multiplicity,
)
from .cyclotomic import cyclotomic, phi_divides
from .numtheory import (
    divisors,
    euler_phi,
    factorize,
    gcd,
    mobius,
    rosser_schoenfeld_bound,
    totient_bounded,
)
from .oracle import (
    ORACLE_CAP_ENV,
    KernelResult,
    adjacency,
    enumerate_balanced,
    kernel,
    oracle_is_nut,
)
from .polynomial import IntPoly
from .search import (
    ScanRecord,
    UniversalCandidate,
    find_pt,
    find_qt_rt,
    scan_range,
)
from .theory import (
    consecutive_is_nut,
    gap_exponents,
    gap_set_obstruction,
    gap_set_universal_t,
    initial_segment_is_nut,
    no_nut_at_minimal_order,
    unique_residue_exponent,
    vt_feasible,
)

__version__ = "0.1.0"

__all__ = [
    "APPENDIX_B",
    "CYCLOTOMIC_WITNESS",
    "GENERATOR_TOO_LARGE",
    "HALF_ORDER_GENERATOR",
    "NUT",
    "ODD_ORDER",
    "ORACLE_CAP_ENV",
    "UNBALANCED_PARITY",
    "GeneratorSet",
    "IntPoly",
    "KernelResult",
    "NutVerdict",
    "ScanRecord",
    "UniversalCandidate",
    "UniversalityReport",
    "adjacency",
    "appendix_table",
    "consecutive_is_nut",
    "cyclotomic",
    "divisors",
    "enumerate_balanced",
    "euler_phi",
    "factorize",
    "find_pt",
    "find_qt_rt",
    "gap_exponents",
    "gap_set",
    "gap_set_obstruction",
    "gap_set_universal_t",
    "gcd",
    "initial_segment_is_nut",
    "is_nut",
    "is_universal",
    "kernel",
    "mobius",
    "no_nut_at_minimal_order",
    "oracle_is_nut",
    "phi_divides",
    "pstar",
    "pstar_table",
    "q_poly",
    "rep_poly",
    "rosser_schoenfeld_bound",
    "scan_range",
    "totient_bounded",
    "unique_residue_exponent",
    "vt_feasible",
    "zero_multiplicity",
]
