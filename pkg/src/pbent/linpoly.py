"""Linearized polynomials L(x) = sum_i a_i x^(p^i) over F_(p^n).

Coefficients are stored reduced modulo n (x^(p^n) = x on the field), so two
polynomials inducing the same map have the same coefficient list.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import NotAPermutation, OutOfRange, ParseError, ZeroParameter
from .galois import Field, FieldElement, norm, parse_element


@dataclass(frozen=True)
class LinearizedPoly:
    field: Field
    coeffs: tuple  # field indices, length n; coeffs[i] multiplies x^(p^i)

    @classmethod
    def from_terms(cls, field: Field, terms) -> "LinearizedPoly":
        """Build from {i: coefficient} or a sequence a_0..a_m (i reduced mod n)."""
        if not isinstance(terms, dict):
            terms = dict(enumerate(terms))
        acc = np.zeros(field.n, dtype=np.int64)
        for i, a in terms.items():
            a = a.index if isinstance(a, FieldElement) else int(a)
            acc[i % field.n] = int(field.add(int(acc[i % field.n]), a))
        return cls(field, tuple(int(c) for c in acc))

    @classmethod
    def identity(cls, field):
        return cls.from_terms(field, {0: 1})

    @classmethod
    def frobenius_power(cls, field, i):
        return cls.from_terms(field, {i: 1})

    def __call__(self, x):
        if isinstance(x, FieldElement):
            return FieldElement(self.field, int(self.evaluate(x.index)))
        return self.evaluate(x)

    def evaluate(self, x) -> np.ndarray:
        f = self.field
        x = np.asarray(x, dtype=np.int64)
        acc = np.zeros(x.shape, dtype=np.int64)
        for i, a in enumerate(self.coeffs):
            if a:
                acc = f.add(acc, f.mul(a, f.frobenius(x, i)))
        return acc

    def table(self) -> np.ndarray:
        """Images of every field element, indexed canonically."""
        return self.evaluate(self.field.elements())

    def compose(self, other: "LinearizedPoly") -> "LinearizedPoly":
        """self o other."""
        f = self.field
        acc = {}
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    k = (i + j) % f.n
                    term = int(f.mul(a, f.frobenius(b, i)))
                    acc[k] = int(f.add(acc.get(k, 0), term))
        return LinearizedPoly.from_terms(f, acc)

    def matrix(self) -> np.ndarray:
        """Z_p matrix of the map in the polynomial basis (column j = L(alpha^j))."""
        f = self.field
        return f.digits[self.evaluate(f.place)].T

    def __str__(self):
        f = self.field
        parts = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "x" if i == 0 else ("x^p" if i == 1 else f"x^p{i}")
            parts.append(f"{_element_text(f, a)}*{mono}")
        return " + ".join(parts) if parts else "0"


def _element_text(field, index):
    if field.primitive and index:
        return f"g^{int(field.log(index))}"
    return field.format_element(index, annotate=False)


def rank_mod_p(M: np.ndarray, p: int) -> int:
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i, c]), None)
        if piv is None:
            continue
        A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        r += 1
        if r == rows:
            break
    return r


def is_permutation_general(L: LinearizedPoly) -> bool:
    """True iff the Z_p-linear map has trivial kernel."""
    return rank_mod_p(L.matrix(), L.field.p) == L.field.n


def binomial(a: FieldElement, r: int) -> LinearizedPoly:
    """x^(p^r) + a x."""
    _check_binomial(a, r)
    return LinearizedPoly.from_terms(a.field, {r: 1, 0: a.index})


def _check_binomial(a: FieldElement, r: int):
    if a.is_zero():
        raise ZeroParameter("binomial coefficient a must be nonzero")
    n = a.field.n
    if not 1 <= r < n:
        raise OutOfRange(f"twist r={r} must satisfy 1 <= r < n={n}")


def is_permutation_binomial(a: FieldElement, r: int) -> bool:
    """x^(p^r) + a x permutes F_(p^n) iff (-1)^(n/d) N_d^n(a) != 1, d = gcd(n, r)."""
    _check_binomial(a, r)
    n = a.field.n
    d = math.gcd(n, r)
    N = norm(a, d)
    sign = 1 if (n // d) % 2 == 0 else -1
    return (N * sign).index != 1


def inverse_binomial(a: FieldElement, r: int) -> LinearizedPoly:
    """Compositional inverse of x^(p^r) + a x.

    With d = gcd(n, r), m = n/d, N = N_d^n(a) and e_i = 1 + p^r + ... + p^(ir):

        L^-1(x) = N / (N - (-1)^m) * sum_{i<m} (-1)^i a^(-e_i) x^(p^(ir)).
    """
    if not is_permutation_binomial(a, r):
        raise NotAPermutation(f"x^(p^{r}) + a x is not a permutation for a = {a}")
    f = a.field
    n, p = f.n, f.p
    d = math.gcd(n, r)
    m = n // d
    N = norm(a, d)
    pref = N / (N - (1 if m % 2 == 0 else -1))
    terms = {}
    for i in range(m):
        e = sum(p ** (j * r) for j in range(i + 1))
        c = pref * a ** (-(e % (f.order - 1)))
        if i % 2:
            c = -c
        k = (i * r) % n
        terms[k] = int(f.add(terms.get(k, 0), c.index))
    return LinearizedPoly.from_terms(f, terms)


def inverse_binomial_half(a: FieldElement) -> LinearizedPoly:
    """n even, r = n/2: (a^(p^(n/2)+1) - 1)^-1 (a^(p^(n/2)) x - x^(p^(n/2)))."""
    f = a.field
    if f.n % 2:
        raise OutOfRange("the half-twist shortcut needs n even")
    h = f.n // 2
    Q = f.p**h
    if not is_permutation_binomial(a, h):
        raise NotAPermutation(f"x^(p^{h}) + a x is not a permutation for a = {a}")
    c = (a ** (Q + 1) - 1).inverse()
    return LinearizedPoly.from_terms(f, {0: (c * a**Q).index, h: (-c).index})


def inverse_linearized(L: LinearizedPoly) -> LinearizedPoly:
    """Compositional inverse of any permutation linearized polynomial.

    The inverse M(x) = sum_i b_i x^(p^i) is fixed by its values on the basis
    alpha^j; solving sum_i b_i (alpha^j)^(p^i) = L^-1(alpha^j) is an n x n
    system over F_(p^n) whose matrix (the Moore matrix of the basis) is
    invertible.
    """
    f = L.field
    n = f.n
    table = L.table()
    if np.unique(table).size != table.size:
        raise NotAPermutation(f"{L} is not a permutation")
    inv = inverse_map(table)
    basis = f.place  # indices of alpha^j
    A = np.array([[int(f.frobenius(int(b), i)) for i in range(n)] for b in basis], dtype=np.int64)
    rhs = inv[basis].astype(np.int64)
    # Gauss-Jordan elimination over the field
    for c in range(n):
        piv = next(r for r in range(c, n) if A[r, c])
        A[[c, piv]] = A[[piv, c]]
        rhs[[c, piv]] = rhs[[piv, c]]
        s = int(f.inv(int(A[c, c])))
        A[c] = f.mul(s, A[c])
        rhs[c] = int(f.mul(s, int(rhs[c])))
        for r in range(n):
            if r != c and A[r, c]:
                m = int(A[r, c])
                A[r] = f.sub(A[r], f.mul(m, A[c]))
                rhs[r] = int(f.sub(int(rhs[r]), int(f.mul(m, int(rhs[c])))))
    return LinearizedPoly(f, tuple(int(b) for b in rhs))


def inverse_map(table: np.ndarray) -> np.ndarray:
    """Inverse of a permutation given as an image table."""
    table = np.asarray(table, dtype=np.int64)
    inv = np.empty_like(table)
    inv[table] = np.arange(table.size, dtype=np.int64)
    return inv


_TERM_RE = re.compile(r"^\s*(.+?)\s*\*\s*x(?:\^p(\d*))?\s*$")


def parse_linearized(field: Field, text: str) -> LinearizedPoly:
    """Parse ``a0*x + a1*x^p + a2*x^p2 + ...`` (coefficients in element syntax)."""
    terms = {}
    for chunk in _split_terms(text):
        m = _TERM_RE.match(chunk)
        if not m:
            raise ParseError(f"cannot parse linearized term {chunk!r}")
        coeff, power = m.group(1), m.group(2)
        k = 0 if power is None else (1 if power == "" else int(power))
        e = parse_element(field, coeff)
        terms[k] = int(field.add(terms.get(k, 0), e.index))
    return LinearizedPoly.from_terms(field, terms)


def _split_terms(text):
    depth, cur, out = 0, [], []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [c for c in out if c.strip()]
