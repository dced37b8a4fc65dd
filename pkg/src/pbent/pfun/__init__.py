"""p-ary functions: truth tables, Walsh spectra, classification, degree."""

from .classify import (
    BENT,
    NOT_PLATEAUED,
    Classification,
    classify,
    plateau_summary,
    regularity_and_dual,
    verdict_name,
)
from .degree import algebraic_degree, evaluate_poly, interpolate, p_weight
from .function import PAryFunction, PairDomain, linear_form, random_function, zero_function
from .walsh import (
    WalshSpectrum,
    check_spectrum,
    invert_spectrum,
    walsh,
    walsh_fast,
    walsh_fast_batch,
    walsh_naive,
)

__all__ = [
    "BENT",
    "NOT_PLATEAUED",
    "Classification",
    "PAryFunction",
    "PairDomain",
    "WalshSpectrum",
    "algebraic_degree",
    "check_spectrum",
    "classify",
    "evaluate_poly",
    "interpolate",
    "invert_spectrum",
    "linear_form",
    "p_weight",
    "plateau_summary",
    "random_function",
    "regularity_and_dual",
    "verdict_name",
    "walsh",
    "walsh_fast",
    "walsh_fast_batch",
    "walsh_naive",
    "zero_function",
]
