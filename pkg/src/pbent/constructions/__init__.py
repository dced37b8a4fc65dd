"""Constructors, closed-form oracles and predictors for the bent families."""

from .augment import (
    augment_indicator,
    augment_product,
    augment_product_pair,
    lemma4_rhs,
    lemma4_rhs_table,
    lemma5_rhs,
    lemma5_rhs_table,
    lemma6_rhs,
    lemma6_rhs_table,
)
from .base import (
    kasami,
    kasami_walsh_oracle,
    kasami_walsh_table,
    mm_function,
    mm_walsh_oracle,
    mm_walsh_table,
    sidelnikov,
    sidelnikov_prefactor,
    sidelnikov_walsh_complex,
    sidelnikov_walsh_oracle,
    sidelnikov_walsh_table,
)
from .indicator import ConditionReport, IndicatorConstruction, KasamiIndicator, theorem4, theorem5
from .predict import (
    EXCEPTIONAL_A,
    EXCEPTIONAL_B,
    NEAR_BENT,
    SET_A,
    SET_B,
    TWO_PLATEAUED,
    ClassPrediction,
    SpectrumDistribution,
    TraceTriple,
    observed_distribution,
    theorem1_distribution,
    theorem1_function,
    theorem1_predict,
    theorem1_triples,
    theorem2_distribution,
    theorem2_function,
    theorem2_predict,
    theorem2_triples,
    theorem3_base,
    theorem3_function,
    theorem3_predict,
    theorem3_triples,
    verdict_codes,
)
