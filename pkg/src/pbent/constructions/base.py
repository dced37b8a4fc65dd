"""Base bent families: Kasami and Sidelnikov monomials, Maiorana-McFarland.

Each constructor returns a :class:`~pbent.pfun.PAryFunction`; each oracle
returns the closed-form Walsh coefficient exactly in Z[w].
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .. import cyclotomic as cyc
from ..cyclotomic import CyclotomicInt
from ..errors import NotAPermutation, NotInSubfield, OddDegree, ZeroLambda, ZeroParameter
from ..galois import Field, FieldElement
from ..linpoly import LinearizedPoly, inverse_map
from ..pfun import PAryFunction, PairDomain


def _idx(x):
    return x.index if isinstance(x, FieldElement) else int(x)


def _nonzero(x, name, exc=ZeroParameter):
    if _idx(x) == 0:
        raise exc(f"{name} must be nonzero")


def _half(field: Field) -> int:
    if field.n % 2:
        raise OddDegree(f"n = {field.n} is odd; the construction needs n = 2k")
    return field.n // 2


def root_rows(p: int, exponents, scale) -> np.ndarray:
    """Canonical rows of scale * w^e for an array of exponents."""
    exponents = np.asarray(exponents, dtype=np.int64) % p
    scale = np.broadcast_to(np.asarray(scale, dtype=np.int64), exponents.shape)
    ext = np.zeros(exponents.shape + (p,), dtype=np.int64)
    np.put_along_axis(ext, exponents[..., None], scale[..., None], axis=-1)
    return cyc.canonical(ext)


# -- Kasami ------------------------------------------------------------------

def kasami_table(field: Field, lam) -> np.ndarray:
    k = _half(field)
    lam = _idx(lam)
    _nonzero(lam, "lambda")
    if not field.in_subfield(lam, k):
        raise NotInSubfield(f"lambda must lie in F_{field.p}^{k}")
    x = field.elements()
    return field.sub_trace(field.mul(lam, field.power(x, field.p**k + 1)), k)


def kasami(field: Field, lam) -> PAryFunction:
    """Tr_1^k(lambda x^(p^k + 1)) on F_(p^(2k)), lambda in F_(p^k)^*."""
    return PAryFunction(field, kasami_table(field, lam), name="kasami")


def kasami_walsh_table(field: Field, lam) -> np.ndarray:
    """-p^k w^(-Tr_1^k(lambda^-1 a^(p^k+1))) for every a."""
    k = _half(field)
    lam = _idx(lam)
    _nonzero(lam, "lambda")
    a = field.elements()
    y = field.mul(field.inv(lam), field.power(a, field.p**k + 1))
    return root_rows(field.p, -field.sub_trace(y, k), -(field.p**k))


def kasami_walsh_oracle(field: Field, lam, a) -> CyclotomicInt:
    k = _half(field)
    lam, a = _idx(lam), _idx(a)
    y = int(field.mul(field.inv(lam), field.power(a, field.p**k + 1)))
    return CyclotomicInt.root(field.p, -int(field.sub_trace(y, k)), -(field.p**k))


# -- Sidelnikov ----------------------------------------------------------------

def sidelnikov(field: Field, lam) -> PAryFunction:
    """Tr_1^n(lambda x^2), lambda != 0."""
    lam = _idx(lam)
    _nonzero(lam, "lambda", ZeroLambda)
    x = field.elements()
    return PAryFunction(field, field.tr(field.mul(lam, field.mul(x, x))), name="sidelnikov")


def sidelnikov_prefactor(field: Field, lam) -> CyclotomicInt:
    """eta(lambda) (-1)^(n-1) p^(n/2) (times i^n when p = 3 mod 4), exactly.

    Both cases equal eta(lambda) (-1)^(n-1) G^n for the quadratic Gauss sum G
    of Z_p, since G = sqrt(p) for p = 1 mod 4 and G = i sqrt(p) for p = 3 mod 4.
    """
    lam = _idx(lam)
    _nonzero(lam, "lambda")
    n = field.n
    sign = int(field.eta(lam)) * (-1) ** (n - 1)
    return CyclotomicInt.gauss_sum(field.p) ** n * sign


def _sidelnikov_exponents(field: Field, lam, a):
    four_lam = field.smul(4, _idx(lam))
    return -field.tr(field.div(field.mul(a, a), four_lam))


def sidelnikov_walsh_table(field: Field, lam) -> np.ndarray:
    pre = np.array(sidelnikov_prefactor(field, lam).coeffs, dtype=np.int64)
    e = _sidelnikov_exponents(field, lam, field.elements())
    return cyc.mul_root_array(np.broadcast_to(pre, (field.order, field.p - 1)), e)


def sidelnikov_walsh_oracle(field: Field, lam, a) -> CyclotomicInt:
    e = int(_sidelnikov_exponents(field, lam, _idx(a)))
    return sidelnikov_prefactor(field, lam).mul_root(e)


def sidelnikov_walsh_complex(field: Field, lam, a) -> complex:
    """Float evaluation of the two-case closed form (independent of the Gauss sum)."""
    p, n = field.p, field.n
    lam = _idx(lam)
    amp = p ** (n / 2) * (1 if p % 4 == 1 else 1j**n)
    pre = int(field.eta(lam)) * (-1) ** (n - 1) * amp
    e = int(_sidelnikov_exponents(field, lam, _idx(a)))
    return pre * cmath.exp(2j * math.pi * e / p)


# -- Maiorana-McFarland ----------------------------------------------------------

def _perm_table(field: Field, pi) -> np.ndarray:
    table = pi.table() if isinstance(pi, LinearizedPoly) else np.asarray(pi, dtype=np.int64)
    if table.shape != (field.order,) or np.unique(table).size != field.order:
        raise NotAPermutation("pi is not a permutation of the field")
    return table


def _h_table(field: Field, h) -> np.ndarray:
    if h is None:
        return np.zeros(field.order, dtype=np.int64)
    if isinstance(h, PAryFunction):
        return h.table
    return np.asarray(h, dtype=np.int64) % field.p


def mm_function(pi, h=None, field: Field | None = None) -> PAryFunction:
    """g(x, y) = Tr(x pi(y)) + h(y) on F_q x F_q.

    ``pi`` is a :class:`~pbent.linpoly.LinearizedPoly` (or a permutation table,
    then ``field`` is required); ``h`` is a function on F_q (default 0).
    """
    field = pi.field if isinstance(pi, LinearizedPoly) else field
    perm = _perm_table(field, pi)
    ht = _h_table(field, h)
    dom = PairDomain(field)
    xs, ys = dom.split(dom.elements())
    table = (field.pairing(xs, perm[ys]) + ht[ys]) % field.p
    return PAryFunction(dom, table, name="maiorana-mcfarland")


def mm_walsh_table(pi, h=None, field: Field | None = None) -> np.ndarray:
    """q w^(-Tr(a2 pi^-1(a1)) + h(pi^-1(a1))) for every (a1, a2)."""
    field = pi.field if isinstance(pi, LinearizedPoly) else field
    inv = inverse_map(_perm_table(field, pi))
    ht = _h_table(field, h)
    dom = PairDomain(field)
    a1, a2 = dom.split(dom.elements())
    y = inv[a1]
    return root_rows(field.p, -field.pairing(a2, y) + ht[y], field.order)


def mm_walsh_oracle(pi, h, a1, a2, field: Field | None = None) -> CyclotomicInt:
    field = pi.field if isinstance(pi, LinearizedPoly) else field
    inv = inverse_map(_perm_table(field, pi))
    ht = _h_table(field, h)
    y = int(inv[_idx(a1)])
    e = -int(field.pairing(_idx(a2), y)) + int(ht[y])
    return CyclotomicInt.root(field.p, e, field.order)
