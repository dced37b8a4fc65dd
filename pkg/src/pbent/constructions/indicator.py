"""Bent functions of algebraic degree p from the indicator augmentation.

Both constructors always return the function; the side conditions are
evaluated and reported rather than enforced, so callers can look at what
happens when they fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from ..cyclotomic import CyclotomicInt
from ..errors import DegreeTooSmall, NotInSubfield, OddDegree, UInPrimeField, ZeroParameter
from ..galois import Field, FieldElement
from ..pfun import PAryFunction
from .augment import augment_indicator
from .base import kasami, root_rows, sidelnikov


def _idx(x):
    return x.index if isinstance(x, FieldElement) else int(x)


@dataclass
class ConditionReport:
    """Named side conditions with their truth values."""

    conditions: dict = dc_field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(self.conditions.values())

    def as_dict(self):
        return {"conditions": dict(self.conditions), "all_hold": self.holds}

    def __str__(self):
        return ", ".join(f"{k}: {'yes' if v else 'no'}" for k, v in self.conditions.items())


@dataclass
class IndicatorConstruction:
    function: PAryFunction
    report: ConditionReport
    field: Field
    lam: int
    u: int

    def __iter__(self):
        return iter((self.function, self.report))


def _check_u(field: Field, u):
    u = _idx(u)
    if u < field.p:  # indices 0..p-1 are exactly the prime-field constants
        raise UInPrimeField("u must lie outside the prime field")
    return u


class KasamiIndicator(IndicatorConstruction):
    """Tr_1^k(lambda x^(p^k+1)) - Tr(ux) Tr(x)^(p-1) and its two-case spectrum."""

    def __iter__(self):
        return iter((self.function, self.report, self.oracle))

    def _shifted(self, a):
        f = self.field
        k = f.n // 2
        a = np.asarray(a, dtype=np.int64)
        li = int(f.inv(self.lam))
        # Tr(lambda^-1 a) = 0 selects a, otherwise a + u
        b = np.where(f.tr(f.mul(li, a)) == 0, a, f.add(a, self.u))
        e = -f.sub_trace(f.mul(li, f.power(b, f.p**k + 1)), k)
        return e, -(f.p**k)

    def oracle(self, a) -> CyclotomicInt:
        e, scale = self._shifted(_idx(a))
        return CyclotomicInt.root(self.field.p, int(e), scale)

    def oracle_table(self) -> np.ndarray:
        e, scale = self._shifted(self.field.elements())
        return root_rows(self.field.p, e, scale)


def theorem4(field: Field, lam, u) -> KasamiIndicator:
    """Kasami base plus the indicator term; needs n = 2k, k > 1, lambda in F_(p^k)^*."""
    if field.n % 2:
        raise OddDegree(f"n = {field.n} is odd")
    k = field.n // 2
    if k <= 1:
        raise DegreeTooSmall("the construction needs k > 1")
    lam = _idx(lam)
    if lam == 0:
        raise ZeroParameter("lambda must be nonzero")
    if not field.in_subfield(lam, k):
        raise NotInSubfield(f"lambda must lie in F_{field.p}^{k}")
    u = _check_u(field, u)
    li = int(field.inv(lam))
    report = ConditionReport(
        {
            f"Tr_1^{k}(lambda^-1) = 0": int(field.sub_trace(li, k)) == 0,
            f"Tr_1^{field.n}(lambda^-1 u) = 0": int(field.tr(field.mul(li, u))) == 0,
        }
    )
    f = augment_indicator(kasami(field, lam), u)
    return KasamiIndicator(f, report, field, lam, u)


def theorem5(field: Field, lam, u) -> IndicatorConstruction:
    """Sidelnikov base plus the indicator term; needs n > 2."""
    if field.n <= 2:
        raise DegreeTooSmall("the construction needs n > 2")
    lam = _idx(lam)
    if lam == 0:
        raise ZeroParameter("lambda must be nonzero")
    u = _check_u(field, u)
    inv4 = int(field.inv(field.smul(4, lam)))
    n = field.n
    report = ConditionReport(
        {
            f"Tr_1^{n}(1/(4 lambda)) = 0": int(field.tr(inv4)) == 0,
            f"Tr_1^{n}(u/(4 lambda)) = 0": int(field.tr(field.mul(u, inv4))) == 0,
        }
    )
    f = augment_indicator(sidelnikov(field, lam), u)
    return IndicatorConstruction(f, report, field, lam, u)
