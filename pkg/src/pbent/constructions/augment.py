"""Secondary constructions: adding a product of linear forms, or an indicator term.

The ``*_rhs`` functions evaluate the spectrum of the augmented function from
the spectrum of ``g`` alone.  They hold for every ``g``, bent or not, and
are checked against a direct transform in the tests.
"""

from __future__ import annotations

import numpy as np

from .. import cyclotomic as cyc
from ..cyclotomic import CyclotomicInt
from ..errors import InvariantViolation, NotTernary, ZeroParameter
from ..galois import Field, FieldElement
from ..pfun import PAryFunction, PairDomain, WalshSpectrum


def _domain_index(domain, x) -> int:
    """Index of ``x`` in ``domain``: an int, a FieldElement, or an (x, y) pair."""
    if isinstance(x, FieldElement):
        return x.index
    if isinstance(x, (tuple, list)):
        if not isinstance(domain, PairDomain):
            raise TypeError("pairs only make sense on a pair domain")
        a, b = (getattr(t, "index", t) for t in x)
        return int(domain.index(int(a), int(b)))
    return int(x)


def _check_ternary(domain):
    if domain.p != 3:
        raise NotTernary(f"the product construction needs p = 3, got p = {domain.p}")


def _exact_div(values: np.ndarray, c: int) -> np.ndarray:
    if np.any(values % c):
        raise InvariantViolation(f"combination is not divisible by {c} in Z[w]")
    return values // c


# -- product of two linear forms -------------------------------------------------

def augment_product(g: PAryFunction, u, v) -> PAryFunction:
    """f = g + <u, x> <v, x> (ternary; single field or pair domain)."""
    dom = g.domain
    _check_ternary(dom)
    u, v = _domain_index(dom, u), _domain_index(dom, v)
    if u == 0 or v == 0:
        raise ZeroParameter("u and v must be nonzero")
    x = dom.elements()
    table = (g.table + dom.pairing(u, x) * dom.pairing(v, x)) % 3
    return PAryFunction(dom, table, name=f"{g.name}+product" if g.name else "product")


def augment_product_pair(g: PAryFunction, u, v) -> PAryFunction:
    """Pair-domain form: u = (u1, u2), v = (v1, v2) with Tr_1^k(u1 x + u2 y) etc."""
    if not isinstance(g.domain, PairDomain):
        raise TypeError("augment_product_pair needs a function on F_q x F_q")
    return augment_product(g, u, v)


# (sign of u shift, sign of v shift, power of w) for the nine terms
_PRODUCT_TERMS = (
    (0, 0, 0), (1, 0, 0), (-1, 0, 0),
    (0, -1, 0), (1, -1, 1), (-1, -1, 2),
    (0, 1, 0), (1, 1, 2), (-1, 1, 1),
)


def _shift(dom, a, u, su):
    if su == 1:
        return dom.add(a, u)
    if su == -1:
        return dom.sub(a, u)
    return a


def lemma4_rhs_table(spectrum: WalshSpectrum, u, v) -> np.ndarray:
    """Spectrum of g + <u,x><v,x> for every a, from the spectrum of g."""
    dom = spectrum.domain
    _check_ternary(dom)
    u, v = _domain_index(dom, u), _domain_index(dom, v)
    a = dom.elements()
    acc = np.zeros_like(spectrum.values)
    for su, sv, w in _PRODUCT_TERMS:
        b = _shift(dom, _shift(dom, a, u, su), v, sv)
        acc = acc + cyc.mul_root_array(spectrum.values[b], w)
    return _exact_div(acc, 3)


def lemma4_rhs(spectrum: WalshSpectrum, u, v, a) -> CyclotomicInt:
    dom = spectrum.domain
    _check_ternary(dom)
    u, v, a = (_domain_index(dom, t) for t in (u, v, a))
    acc = CyclotomicInt.zero(3)
    for su, sv, w in _PRODUCT_TERMS:
        b = int(_shift(dom, _shift(dom, a, u, su), v, sv))
        acc = acc + spectrum[b].mul_root(w)
    return acc.exact_div(3)


# the pair-domain identity has exactly the same shape
lemma5_rhs_table = lemma4_rhs_table
lemma5_rhs = lemma4_rhs


# -- indicator term --------------------------------------------------------------

def augment_indicator(g: PAryFunction, u) -> PAryFunction:
    """f = g - Tr(u x) Tr(x)^(p-1) on a single field, any odd p."""
    field = g.domain
    if not isinstance(field, Field):
        raise TypeError("augment_indicator needs a single-field domain")
    u = _domain_index(field, u)
    if u == 0:
        raise ZeroParameter("u must be nonzero")
    p = field.p
    x = field.elements()
    t = field.tr(x)
    # Tr(x)^(p-1) is 1 off the trace-zero hyperplane and 0 on it
    table = (g.table - field.tr(field.mul(u, x)) * (t != 0)) % p
    return PAryFunction(field, table, name=f"{g.name}-indicator" if g.name else "indicator")


def lemma6_rhs_table(spectrum: WalshSpectrum, u) -> np.ndarray:
    """(1/p) sum_j chi(a+j) - (1/p) sum_j chi(a+u+j) + chi(a+u), j in F_p."""
    field = spectrum.domain
    p = field.p
    u = _domain_index(field, u)
    a = field.elements()
    au = field.add(a, u)
    vals = spectrum.values
    acc = p * vals[au]
    for j in range(p):
        acc = acc + vals[field.add(a, j)] - vals[field.add(au, j)]
    return _exact_div(acc, p)


def lemma6_rhs(spectrum: WalshSpectrum, u, a) -> CyclotomicInt:
    field = spectrum.domain
    p = field.p
    u, a = _domain_index(field, u), _domain_index(field, a)
    au = int(field.add(a, u))
    acc = spectrum[au].scale(p)
    for j in range(p):
        acc = acc + spectrum[int(field.add(a, j))] - spectrum[int(field.add(au, j))]
    return acc.exact_div(p)
