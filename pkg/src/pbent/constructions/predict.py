"""Trace-triple predictors for the product constructions and their spectrum tables.

A prediction is a verdict string from :mod:`pbent.pfun.classify`
(``"bent"``, ``"near-bent"`` or ``"2-plateaued"``), so it can be compared
with an observed classification directly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from ..cyclotomic import CyclotomicInt
from ..errors import (
    DegreeTooSmall,
    NotAPermutation,
    NotInSubfield,
    NotTernary,
    OddDegree,
    OutOfRange,
    ZeroParameter,
)
from ..galois import Field
from ..linpoly import LinearizedPoly, inverse_map
from ..pfun import PAryFunction, PairDomain
from ..pfun.classify import BENT, verdict_name
from .augment import _domain_index, augment_product
from .base import kasami, mm_function, sidelnikov

NEAR_BENT = verdict_name(1)
TWO_PLATEAUED = verdict_name(2)

SET_A = frozenset(
    {(0, 1, 1), (0, 2, 2), (1, 1, 1), (1, 2, 2), (2, 0, 1), (2, 0, 2), (2, 1, 0), (2, 2, 0)}
)
SET_B = frozenset(
    {(0, 1, 1), (0, 2, 2), (1, 0, 1), (1, 0, 2), (1, 1, 0), (1, 2, 0), (2, 1, 1), (2, 2, 2)}
)
EXCEPTIONAL_A = (2, 0, 0)
EXCEPTIONAL_B = (1, 0, 0)


@dataclass(frozen=True)
class TraceTriple:
    t0: int
    t1: int
    t2: int

    def astuple(self):
        return (self.t0, self.t1, self.t2)

    def __str__(self):
        return f"({self.t0},{self.t1},{self.t2})"


@dataclass(frozen=True)
class ClassPrediction:
    verdict: str
    exceptional_triple: tuple
    set_used: str  # "A" or "B"


def _predict(triple, set_name: str) -> ClassPrediction:
    near, exc = (SET_A, EXCEPTIONAL_A) if set_name == "A" else (SET_B, EXCEPTIONAL_B)
    t = tuple(int(x) for x in triple)
    if t == exc:
        verdict = TWO_PLATEAUED
    elif t in near:
        verdict = NEAR_BENT
    else:
        verdict = BENT
    return ClassPrediction(verdict, exc, set_name)


def verdict_codes(t0, t1, t2, set_name: str) -> np.ndarray:
    """Predicted plateau exponent s (0, 1 or 2) for arrays of triples."""
    near, exc = (SET_A, EXCEPTIONAL_A) if set_name == "A" else (SET_B, EXCEPTIONAL_B)
    lut = np.zeros(27, dtype=np.int64)
    for t in near:
        lut[t[0] * 9 + t[1] * 3 + t[2]] = 1
    lut[exc[0] * 9 + exc[1] * 3 + exc[2]] = 2
    return lut[np.asarray(t0) * 9 + np.asarray(t1) * 3 + np.asarray(t2)]


def _ternary(field):
    if field.p != 3:
        raise NotTernary(f"the product constructions need p = 3, got p = {field.p}")


def _nonzero(field_or_dom, x, name):
    i = _domain_index(field_or_dom, x)
    if i == 0:
        raise ZeroParameter(f"{name} must be nonzero")
    return i


# -- Kasami base, product augmentation ---------------------------------------

def theorem1_triples(field: Field, lam, u, v):
    """Vectorised (t0, t1, t2) for the Kasami-based construction (no precondition checks)."""
    k = field.n // 2
    Q = 3**k
    li = field.inv(lam)
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    t0 = field.tr(field.mul(li, field.mul(field.frobenius(u, k), v)))
    t1 = field.sub_trace(field.mul(li, field.power(u, Q + 1)), k)
    t2 = field.sub_trace(field.mul(li, field.power(v, Q + 1)), k)
    return t0, t1, t2


def _theorem1_checks(field, lam):
    _ternary(field)
    if field.n % 2:
        raise OddDegree(f"n = {field.n} is odd")
    k = field.n // 2
    if k <= 1:
        raise DegreeTooSmall("the Kasami product construction is predicted only for k > 1")
    lam = _nonzero(field, lam, "lambda")
    if not field.in_subfield(lam, k):
        raise NotInSubfield(f"lambda must lie in F_3^{k}")
    return lam


def theorem1_predict(field: Field, lam, u, v):
    """Triple and verdict for Tr_1^k(lambda x^(3^k+1)) + Tr(ux)Tr(vx)."""
    lam = _theorem1_checks(field, lam)
    u, v = _nonzero(field, u, "u"), _nonzero(field, v, "v")
    t = TraceTriple(*(int(x) for x in theorem1_triples(field, lam, u, v)))
    return t, _predict(t.astuple(), "A")


def theorem1_function(field: Field, lam, u, v) -> PAryFunction:
    return augment_product(kasami(field, lam), u, v)


# -- Sidelnikov base, product augmentation -----------------------------------

def theorem2_triples(field: Field, lam, u, v):
    li = field.inv(lam)
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    t0 = field.tr(field.mul(li, field.mul(u, v)))
    t1 = field.tr(field.mul(li, field.mul(u, u)))
    t2 = field.tr(field.mul(li, field.mul(v, v)))
    return t0, t1, t2


def _theorem2_checks(field, lam):
    _ternary(field)
    if field.n <= 3:
        raise DegreeTooSmall("the Sidelnikov product construction is predicted only for n > 3")
    return _nonzero(field, lam, "lambda")


def theorem2_predict(field: Field, lam, u, v):
    """Triple and verdict for Tr(lambda x^2) + Tr(ux)Tr(vx)."""
    lam = _theorem2_checks(field, lam)
    u, v = _nonzero(field, u, "u"), _nonzero(field, v, "v")
    t = TraceTriple(*(int(x) for x in theorem2_triples(field, lam, u, v)))
    return t, _predict(t.astuple(), "B")


def theorem2_function(field: Field, lam, u, v) -> PAryFunction:
    return augment_product(sidelnikov(field, lam), u, v)


# -- Maiorana-McFarland base, product augmentation ---------------------------

def _inverse_table(pi):
    if not isinstance(pi, LinearizedPoly):
        raise TypeError("pi must be a LinearizedPoly")
    table = pi.table()
    if np.unique(table).size != table.size:
        raise NotAPermutation(f"{pi} is not a permutation")
    return inverse_map(table)


def theorem3_triples(pi: LinearizedPoly, u, v, inverse=None):
    """Vectorised triple for pair-domain indices u, v."""
    field = pi.field
    inv = _inverse_table(pi) if inverse is None else inverse
    dom = PairDomain(field)
    u1, u2 = dom.split(u)
    v1, v2 = dom.split(v)
    t0 = (field.pairing(u2, inv[v1]) + field.pairing(v2, inv[u1])) % 3
    t1 = field.pairing(u2, inv[u1])
    t2 = field.pairing(v2, inv[v1])
    return t0, t1, t2


def theorem3_predict(pi: LinearizedPoly, u, v):
    """Triple and verdict for Tr(x pi(y)) + Tr(y) + <u,(x,y)><v,(x,y)>."""
    field = pi.field
    _ternary(field)
    inv = _inverse_table(pi)
    dom = PairDomain(field)
    u, v = _nonzero(dom, u, "u"), _nonzero(dom, v, "v")
    t = TraceTriple(*(int(x) for x in theorem3_triples(pi, u, v, inv)))
    return t, _predict(t.astuple(), "A")


def theorem3_base(pi: LinearizedPoly) -> PAryFunction:
    field = pi.field
    return mm_function(pi, field.tr(field.elements()))


def theorem3_function(pi: LinearizedPoly, u, v) -> PAryFunction:
    return augment_product(theorem3_base(pi), u, v)


# -- spectrum distributions ----------------------------------------------------

@dataclass(frozen=True)
class SpectrumDistribution:
    """Value multiset of a spectrum: ``entries`` maps CyclotomicInt -> count."""

    p: int
    entries: tuple  # ((value, count), ...)

    @classmethod
    def from_dict(cls, p, d):
        items = sorted(d.items(), key=lambda kv: kv[0].coeffs)
        return cls(p, tuple((k, int(c)) for k, c in items if c))

    def as_counter(self) -> Counter:
        return Counter(dict(self.entries))

    @property
    def total(self):
        return sum(c for _, c in self.entries)

    def matches(self, observed) -> bool:
        return self.as_counter() == Counter({k: c for k, c in dict(observed).items() if c})

    def __str__(self):
        return "{" + ", ".join(f"{v}: {c}" for v, c in self.entries) + "}"


def theorem1_distribution(k: int) -> SpectrumDistribution:
    """Value counts of the 2-plateaued Kasami-based spectrum on F_(3^(2k))."""
    if k < 2:
        raise DegreeTooSmall("the table needs k >= 2")
    n = 2 * k
    top = -(3 ** (k + 1))
    base = CyclotomicInt.integer(3, top)
    return SpectrumDistribution.from_dict(
        3,
        {
            CyclotomicInt.zero(3): 3**n - 3 ** (n - 2),
            base: 3 ** (n - 3) - 2 * 3 ** (k - 2),
            base.mul_root(1): 3 ** (n - 3) + 3 ** (k - 2),
            base.mul_root(2): 3 ** (n - 3) + 3 ** (k - 2),
        },
    )


def theorem2_distribution(n: int, eta: int) -> SpectrumDistribution:
    """Value counts of the 2-plateaued Sidelnikov-based spectrum on F_(3^n).

    ``eta`` is the quadratic character of lambda.  For odd n the common factor
    eta i^n 3^(n/2+1) is 3 eta (w - w^2)^n, since w - w^2 = i sqrt(3).
    """
    if n <= 3:
        raise DegreeTooSmall("the table needs n > 3")
    if eta not in (1, -1):
        raise OutOfRange("eta must be +1 or -1")
    zero = CyclotomicInt.zero(3)
    if n % 2 == 0:
        i_n = (-1) ** (n // 2)
        base = CyclotomicInt.integer(3, -eta * i_n * 3 ** (n // 2 + 1))
        m = eta * i_n * 3 ** (n // 2 - 2)
        counts = [3 ** (n - 3) - 2 * m, 3 ** (n - 3) + m, 3 ** (n - 3) + m]
    else:
        sqrt_m3 = CyclotomicInt(3, [0, 1]) - CyclotomicInt(3, [0, 0, 1])
        base = sqrt_m3**n * (3 * eta)
        m = eta * (-1) ** ((n + 1) // 2) * 3 ** ((n - 3) // 2)
        counts = [3 ** (n - 3), 3 ** (n - 3) + m, 3 ** (n - 3) - m]
    return SpectrumDistribution.from_dict(
        3,
        {
            zero: 3**n - 3 ** (n - 2),
            base: counts[0],
            base.mul_root(1): counts[1],
            base.mul_root(2): counts[2],
        },
    )


def observed_distribution(p: int, values: np.ndarray) -> Counter:
    rows, counts = np.unique(np.asarray(values), axis=0, return_counts=True)
    return Counter({CyclotomicInt(p, [int(c) for c in r]): int(k) for r, k in zip(rows, counts)})
