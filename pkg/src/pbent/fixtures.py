"""Golden parameter sets for the worked examples, with their expected outcomes.

Parameters are generator exponents (element = g^e) in the listed field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .galois import Field, find_primitive_modulus, make_field, relation_to_modulus
from .linpoly import LinearizedPoly

# the F_(3^6) relation as it was handed to us; it has the root -1, so it is
# reducible and cannot define the field
REDUCIBLE_F3_6_RELATION = {6: 1, 4: -1, 2: 1, 1: -1, 0: -2}

# a^6 - a^4 + a^2 - a - 1 = 0.  An exhaustive search finds two primitive
# sextics reproducing all three expected Kasami product triples; this one
# differs from the reducible relation only in the constant term (see the tests)
F3_6_MODULUS = (2, 2, 1, 0, 2, 0, 1)
F3_4_MODULUS = tuple(relation_to_modulus(3, {4: 1, 3: -1, 0: -1}))  # a^4 - a^3 - 1
F7_4_MODULUS = tuple(relation_to_modulus(7, {4: 1, 2: 5, 1: 4, 0: 3}))  # a^4 + 5a^2 + 4a + 3
F5_3_MODULUS = tuple(relation_to_modulus(5, {3: 1, 1: 3, 0: 3}))  # a^3 + 3a + 3


def field_3_6() -> Field:
    return make_field(3, F3_6_MODULUS)


def field_3_4() -> Field:
    return make_field(3, F3_4_MODULUS)


def field_7_4() -> Field:
    return make_field(7, F7_4_MODULUS)


def field_5_3() -> Field:
    return make_field(5, F5_3_MODULUS)


def field_5_4() -> Field:
    """F_(5^4) with the smallest primitive modulus (any primitive xi would do)."""
    return make_field(5, find_primitive_modulus(5, 4))


@dataclass(frozen=True)
class ProductCase:
    label: str
    u: object  # exponent, or (e1, e2) on the pair domain
    v: object
    triple: tuple
    verdict: str


@dataclass(frozen=True)
class ProductExample:
    name: str
    family: str  # theorem1 | theorem2 | theorem3
    field: callable
    lam: int | None  # exponent of lambda (None for the pair-domain family)
    cases: tuple
    # value counts of the 2-plateaued case, keyed by cyclotomic text
    distribution: dict | None = None


KASAMI_PRODUCT = ProductExample(
    "kasami-product",
    "theorem1",
    field_3_6,
    84,
    (
        ProductCase("kasami-1", 4, 6, (1, 0, 0), "bent"),
        ProductCase("kasami-2", 7, 25, (2, 2, 0), "near-bent"),
        ProductCase("kasami-3", 4, 25, (2, 0, 0), "2-plateaued"),
    ),
    {"0": 648, "-81": 21, "-81*w": 30, "81 + 81*w": 30},  # the last is -81 w^2
)

SIDELNIKOV_PRODUCT = ProductExample(
    "sidelnikov-product",
    "theorem2",
    field_3_4,
    1,
    (
        ProductCase("sidelnikov-1", 4, 7, (2, 2, 0), "bent"),
        ProductCase("sidelnikov-2", 4, 8, (1, 2, 0), "near-bent"),
        ProductCase("sidelnikov-3", 16, 8, (1, 0, 0), "2-plateaued"),
    ),
    {"0": 72, "27": 5, "27*w": 2, "-27 - 27*w": 2},  # the last is 27 w^2
)


def mm_pi(field: Field) -> LinearizedPoly:
    """pi(y) = y^9 + g y."""
    return LinearizedPoly.from_terms(field, {2: 1, 0: field.gen_power(1).index})


def mm_pi_inverse_closed_form(field: Field) -> LinearizedPoly:
    """(g^10 - 1)^-1 (g^9 y - y^9), the stated inverse of :func:`mm_pi`."""
    c = (field.gen_power(10) - 1).inverse()
    return LinearizedPoly.from_terms(field, {0: (c * field.gen_power(9)).index, 2: (-c).index})


MM_PRODUCT = ProductExample(
    "mm-product",
    "theorem3",
    field_3_4,
    None,
    (
        ProductCase("mm-1", (4, 5), (10, 2), (1, 0, 0), "bent"),
        ProductCase("mm-2", (10, 11), (10, 73), (2, 2, 0), "near-bent"),
        ProductCase("mm-3", (4, 5), (10, 46), (2, 0, 0), "2-plateaued"),
    ),
)


@dataclass(frozen=True)
class IndicatorExample:
    name: str
    family: str  # theorem4 | theorem5
    field: callable
    lam: int
    u: int
    degree: int


KASAMI_INDICATOR = IndicatorExample("kasami-indicator", "theorem4", field_7_4, 200, 90, 7)
SIDELNIKOV_INDICATOR = IndicatorExample("sidelnikov-indicator", "theorem5", field_5_3, 9, 14, 5)

PRODUCT_EXAMPLES = (KASAMI_PRODUCT, SIDELNIKOV_PRODUCT, MM_PRODUCT)
INDICATOR_EXAMPLES = (KASAMI_INDICATOR, SIDELNIKOV_INDICATOR)
