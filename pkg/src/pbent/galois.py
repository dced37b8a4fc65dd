"""Arithmetic in GF(p^n) for odd p, in the polynomial basis.

An element of a field with modulus ``m(x)`` of degree ``n`` is stored as its
index ``i = c_0 + c_1 p + ... + c_{n-1} p^{n-1}``, where ``c_j`` are the
coordinates of the element in the basis ``1, a, ..., a^{n-1}`` and ``a`` is
the class of ``x``.  A :class:`Field` precomputes digit, log and antilog
tables so that whole arrays of indices can be combined with numpy; the
scalar :class:`FieldElement` wraps a single index for readable code.

The fields used here are small (a few thousand elements), so full tables are
cheap and make every later truth-table computation a gather.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotADivisor,
    NotMonic,
    NotPrime,
    NotPrimitive,
    ParseError,
    Reducible,
)

# generator-power annotation is printed only for fields at most this large
LOG_ANNOTATION_LIMIT = 3**8


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def prime_factors(m: int) -> list[int]:
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# -- dense polynomials over Z_p, ascending coefficient lists -------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a, b, p):
    m = max(len(a), len(b))
    a = list(a) + [0] * (m - len(a))
    b = list(b) + [0] * (m - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_mod(a, m, p):
    a = _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for j, mj in enumerate(m):
            a[shift + j] = (a[shift + j] - c * mj) % p
        a = _trim(a)
    return a


def _poly_mulmod(a, b, m, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_mod(prod, m, p)


def _poly_powmod(a, e, m, p):
    result, base = [1], _poly_mod(a, m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _x_pow_p_iter(m, p, times):
    """x^(p^times) mod m."""
    r = [0, 1]
    for _ in range(times):
        r = _poly_powmod(r, p, m, p)
    return _poly_mod(r, m, p)


def rabin_irreducible(modulus, p) -> bool:
    """Rabin's test: x^(p^n) = x mod m and gcd(x^(p^(n/q)) - x, m) = 1 for primes q | n."""
    n = len(modulus) - 1
    if n == 1:
        return True
    if _poly_sub(_x_pow_p_iter(modulus, p, n), [0, 1], p):
        return False
    for q in prime_factors(n):
        g = _poly_gcd(modulus, _poly_sub(_x_pow_p_iter(modulus, p, n // q), [0, 1], p), p)
        if len(g) > 1:
            return False
    return True


def smallest_factor_degree(modulus, p) -> int:
    """Degree of the smallest irreducible factor (distinct-degree sweep)."""
    n = len(modulus) - 1
    for d in range(1, n // 2 + 1):
        g = _poly_gcd(modulus, _poly_sub(_x_pow_p_iter(modulus, p, d), [0, 1], p), p)
        if len(g) > 1:
            return d
    return n


# -- fields --------------------------------------------------------------------

class Field:
    """The finite field Z_p[x] / (modulus).

    Use :func:`make_field` rather than the constructor; it validates the
    modulus and caches instances so that equal fields are the same object.

    Array methods (``add``, ``mul``, ``power``, ``tr`` ...) take and
    return integer index arrays.  :meth:`element` gives scalar wrappers.
    """

    def __init__(self, p: int, modulus):
        self.p = int(p)
        self.modulus = tuple(int(c) for c in modulus)
        self.n = len(self.modulus) - 1
        self.order = self.p**self.n
        # the domain protocol shared with PairDomain
        self.size = self.order
        self.dim = self.n
        q, n = self.order, self.n

        self.place = self.p ** np.arange(n, dtype=np.int64)
        idx = np.arange(q, dtype=np.int64)
        self.digits = (idx[:, None] // self.place[None, :]) % self.p

        alpha_powers, alpha_cycle = self._cycle(self._alpha_matrix())
        self.primitive = alpha_cycle == q - 1
        if self.primitive:
            self.generator = int(alpha_powers[1]) if q > 2 else 1
            exp = alpha_powers
        else:
            exp = None
            for cand in range(2, q):
                powers, cycle = self._cycle(self._mult_matrix(self.digits[cand]))
                if cycle == q - 1:
                    self.generator, exp = cand, powers
                    break
        self._exp = np.asarray(exp, dtype=np.int64)
        self._log = np.full(q, -1, dtype=np.int64)
        self._log[self._exp] = np.arange(q - 1, dtype=np.int64)

        self._frob = self._exp[(self._log * self.p) % (q - 1)]
        self._frob[0] = 0
        basis_tr = []
        for j in range(n):
            y = s = int(self.place[j])
            for _ in range(n - 1):
                y = int(self._frob[y])
                s = int(self._add_scalar(s, y))
            basis_tr.append(s)
        if any(t >= self.p for t in basis_tr):
            raise AssertionError("trace of a basis element left the prime field")
        self._basis_trace = np.array(basis_tr, dtype=np.int64)
        self._tr = (self.digits @ self._basis_trace) % self.p
        self.gram = self._tr[self.mul(self.place[:, None], self.place[None, :])]

    # -- construction helpers
    def _alpha_matrix(self):
        n, p = self.n, self.p
        M = np.zeros((n, n), dtype=np.int64)
        for j in range(n - 1):
            M[j + 1, j] = 1
        M[:, n - 1] = [(-c) % p for c in self.modulus[:n]]
        return M

    def _mult_matrix(self, coeffs):
        # column j = coeffs * alpha^j
        n, p = self.n, self.p
        A = self._alpha_matrix()
        M = np.zeros((n, n), dtype=np.int64)
        col = np.array(coeffs, dtype=np.int64) % p
        for j in range(n):
            M[:, j] = col
            col = (A @ col) % p
        return M

    def _cycle(self, M):
        q = self.order
        v = np.zeros(self.n, dtype=np.int64)
        v[0] = 1
        one = 1
        out = []
        for e in range(q - 1):
            i = int(v @ self.place)
            if e > 0 and i == one:
                return out, e
            out.append(i)
            v = (M @ v) % self.p
        if int(v @ self.place) != one:
            return out, 0
        return out, q - 1

    def _add_scalar(self, a, b):
        return int((((self.digits[a] + self.digits[b]) % self.p) @ self.place))

    # -- identity
    def key(self):
        return (self.p, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Field(p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    def spec(self) -> str:
        coeffs = ",".join(str(c) for c in self.modulus)
        return f"p={self.p},n={self.n},mod=[{coeffs}]"

    # -- encoding
    def encode(self, digits) -> np.ndarray:
        return (np.asarray(digits, dtype=np.int64) % self.p) @ self.place

    def decode(self, index) -> np.ndarray:
        return self.digits[np.asarray(index, dtype=np.int64)]

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def element(self, index) -> "FieldElement":
        index = int(index)
        if not 0 <= index < self.order:
            raise ParseError(f"index {index} outside [0, {self.order})")
        return FieldElement(self, index)

    def from_coeffs(self, coeffs) -> "FieldElement":
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            raise ParseError(f"expected at most {self.n} coordinates, got {len(coeffs)}")
        coeffs += [0] * (self.n - len(coeffs))
        return FieldElement(self, int(self.encode(coeffs)))

    def zero(self):
        return FieldElement(self, 0)

    def one(self):
        return FieldElement(self, 1)

    def alpha(self):
        """The class of x (the root of the modulus)."""
        if self.n == 1:
            return FieldElement(self, (-self.modulus[0]) % self.p)
        return FieldElement(self, self.p)

    def gen_power(self, k: int) -> "FieldElement":
        """alpha^k; only defined when alpha generates the multiplicative group."""
        if not self.primitive:
            raise NotPrimitive(f"modulus {list(self.modulus)} is not primitive; g^k is undefined")
        return FieldElement(self, int(self._exp[k % (self.order - 1)]))

    def scalar(self, c: int) -> "FieldElement":
        return FieldElement(self, int(c) % self.p)

    # -- vectorised arithmetic on index arrays
    def add(self, a, b):
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.place

    def sub(self, a, b):
        return ((self.digits[a] - self.digits[b]) % self.p) @ self.place

    def neg(self, a):
        return ((-self.digits[a]) % self.p) @ self.place

    def smul(self, c, a):
        """Multiply by the prime-field scalar c."""
        return ((np.asarray(c)[..., None] * self.digits[a]) % self.p) @ self.place

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        r = self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, r)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        e = int(e)
        if e < 0:
            return self.power(self.inv(a), -e)
        r = self._exp[(self._log[a] * (e % (self.order - 1))) % (self.order - 1)]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, r)

    def log(self, a):
        """Discrete log to the base of :attr:`generator` (table lookup)."""
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("log of zero")
        return self._log[a]

    def frobenius(self, a, times: int = 1):
        """a^(p^times)."""
        a = np.asarray(a, dtype=np.int64)
        e = pow(self.p, times % self.n, self.order - 1) if self.order > 2 else 1
        r = self._exp[(self._log[a] * e) % (self.order - 1)]
        return np.where(a == 0, 0, r)

    def tr(self, a) -> np.ndarray:
        """Absolute trace, as Z_p values."""
        return self._tr[np.asarray(a, dtype=np.int64)]

    def rel_trace(self, a, k: int):
        """Tr_k^n(a) = a + a^(p^k) + ... + a^(p^(n-k)), as field indices."""
        self._check_divisor(k)
        a = np.asarray(a, dtype=np.int64)
        s = y = a
        for _ in range(self.n // k - 1):
            y = self.frobenius(y, k)
            s = self.add(s, y)
        return s

    def sub_trace(self, y, k: int) -> np.ndarray:
        """Tr_1^k(y) for y in the subfield F_(p^k), as Z_p values."""
        self._check_divisor(k)
        y = np.asarray(y, dtype=np.int64)
        if np.any(self.frobenius(y, k) != y):
            from .errors import NotInSubfield

            raise NotInSubfield(f"argument of Tr_1^{k} is not in F_{self.p}^{k}")
        s = z = y
        for _ in range(k - 1):
            z = self.frobenius(z, 1)
            s = self.add(s, z)
        if np.any(s >= self.p):
            raise AssertionError("subfield trace left the prime field")
        return s

    def norm_arr(self, a, l: int):
        self._check_divisor(l)
        e = (self.order - 1) // (self.p**l - 1)
        return self.power(a, e)

    def eta(self, a) -> np.ndarray:
        """Quadratic character with values in {-1, 0, 1}."""
        a = np.asarray(a, dtype=np.int64)
        r = np.where(self._log[a] % 2 == 0, 1, -1)
        return np.where(a == 0, 0, r)

    def in_subfield(self, a, k: int) -> np.ndarray:
        self._check_divisor(k)
        a = np.asarray(a, dtype=np.int64)
        return self.frobenius(a, k) == a

    def subfield(self, k: int) -> "SubfieldHandle":
        self._check_divisor(k)
        return SubfieldHandle(self, k)

    def _check_divisor(self, k):
        if k < 1 or self.n % k:
            raise NotADivisor(f"{k} does not divide {self.n}")

    # -- domain protocol (see pbent.pfun.function)
    def pairing(self, a, x):
        """Tr(a x) for broadcastable index arrays a and x."""
        return self._tr[self.mul(a, x)]

    def format_element(self, index: int, annotate: bool = True) -> str:
        c = ",".join(str(int(d)) for d in self.digits[int(index)])
        s = f"[{c}]"
        if annotate and self.primitive and index != 0 and self.order <= LOG_ANNOTATION_LIMIT:
            s += f" (g^{int(self._log[int(index)])})"
        return s


@lru_cache(maxsize=None)
def _cached_field(p, modulus):
    return Field(p, modulus)


def make_field(p: int, modulus) -> Field:
    """Validate ``modulus`` (ascending, monic) and return the field it defines.

    Raises NotPrime, NotMonic or Reducible.
    """
    p = int(p)
    if not is_prime(p) or p == 2:
        raise NotPrime(f"{p} is not an odd prime")
    modulus = [int(c) for c in modulus]
    if len(modulus) < 2:
        raise NotMonic("modulus must have degree >= 1")
    if any(not 0 <= c < p for c in modulus):
        modulus = [c % p for c in modulus]
    if modulus[-1] != 1:
        raise NotMonic(f"leading coefficient is {modulus[-1]}, expected 1")
    if not rabin_irreducible(modulus, p):
        raise Reducible(smallest_factor_degree(modulus, p))
    return _cached_field(p, tuple(modulus))


def relation_to_modulus(p: int, relation: dict[int, int]) -> list[int]:
    """Turn a relation sum(c_d a^d) = 0, given as {degree: coeff}, into an
    ascending monic modulus with entries in [0, p)."""
    n = max(relation)
    lead = relation[n] % p
    inv = pow(lead, -1, p)
    return [(relation.get(d, 0) * inv) % p for d in range(n + 1)]


def find_primitive_modulus(p: int, n: int) -> list[int]:
    """Smallest (by index of the low coefficients) primitive monic modulus."""
    for low in range(p**n):
        coeffs = [(low // p**j) % p for j in range(n)] + [1]
        if coeffs[0] == 0 or not rabin_irreducible(coeffs, p):
            continue
        if make_field(p, coeffs).primitive:
            return coeffs
    raise AssertionError("no primitive modulus found")


# -- scalar elements -----------------------------------------------------------

@dataclass(frozen=True, slots=True)
class FieldElement:
    field: Field
    index: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.field.digits[self.index])

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("elements of different fields")
            return other.index
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, int(self.field.add(self.index, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, int(self.field.sub(self.index, o)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, int(self.field.sub(o, self.index)))

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg(self.index)))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, int(self.field.mul(self.index, o)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, int(self.field.div(self.index, o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, int(self.field.div(o, self.index)))

    def __pow__(self, e: int):
        return FieldElement(self.field, int(self.field.power(self.index, e)))

    def inverse(self):
        return FieldElement(self.field, int(self.field.inv(self.index)))

    def __bool__(self):
        return self.index != 0

    def is_zero(self):
        return self.index == 0

    def log(self) -> int:
        return int(self.field.log(self.index))

    def __repr__(self):
        return f"FieldElement({self.field.format_element(self.index)})"

    def __str__(self):
        return self.field.format_element(self.index)


@dataclass(frozen=True)
class SubfieldHandle:
    """F_(p^k) inside F_(p^n), represented by membership in the big field."""

    field: Field
    k: int

    @property
    def order(self):
        return self.field.p**self.k

    def contains(self, x) -> bool:
        return bool(self.field.in_subfield(_index(x), self.k))

    def elements(self) -> np.ndarray:
        return np.flatnonzero(self.field.in_subfield(self.field.elements(), self.k))

    def generator(self) -> FieldElement:
        """A generator of the subfield's multiplicative group."""
        f = self.field
        return FieldElement(f, int(f._exp[(f.order - 1) // (self.order - 1)]))

    def __str__(self):
        return f"F_{self.order}"


def _index(x):
    return x.index if isinstance(x, FieldElement) else int(x)


# -- scalar maps ---------------------------------------------------------------

def trace(x: FieldElement, k: int) -> FieldElement:
    """Relative trace Tr_k^n(x); the result lies in F_(p^k)."""
    f = x.field
    r = int(f.rel_trace(x.index, k))
    if not f.in_subfield(r, k):
        raise AssertionError("relative trace left the subfield")
    return FieldElement(f, r)


def trace_to_prime(x: FieldElement) -> int:
    """Absolute trace Tr_1^n(x) as an integer in [0, p)."""
    r = int(x.field.rel_trace(x.index, 1))
    if r >= x.field.p:
        raise AssertionError("absolute trace left the prime field")
    return r


def subfield_trace(y: FieldElement, k: int) -> int:
    """Tr_1^k(y) for y in F_(p^k), as an integer in [0, p)."""
    return int(y.field.sub_trace(y.index, k))


def norm(x: FieldElement, l: int) -> FieldElement:
    """N_l^n(x) = x^((p^n - 1)/(p^l - 1)); norm(0) = 0."""
    return FieldElement(x.field, int(x.field.norm_arr(x.index, l)))


def quadratic_character(x: FieldElement) -> int:
    f = x.field
    if x.index == 0:
        return 0
    v = int(f.power(x.index, (f.order - 1) // 2))
    if v == 1:
        return 1
    if v == int(f.neg(1)):
        return -1
    raise AssertionError("Euler criterion produced neither 1 nor -1")


# -- text interfaces -----------------------------------------------------------

_FIELD_RE = re.compile(r"^\s*p\s*=\s*(\d+)\s*,\s*n\s*=\s*(\d+)\s*,\s*mod\s*=\s*\[([^\]]*)\]\s*$")


def parse_field_spec(text: str) -> Field:
    """Parse ``p=<prime>,n=<deg>,mod=[c0,...,cn]``."""
    m = _FIELD_RE.match(text)
    if not m:
        raise ParseError(f"field spec {text!r} does not match p=<prime>,n=<deg>,mod=[c0,...,cn]")
    p, n = int(m.group(1)), int(m.group(2))
    try:
        coeffs = [int(c) for c in m.group(3).split(",") if c.strip()]
    except ValueError as exc:
        raise ParseError(f"bad modulus coefficient in {text!r}") from exc
    if len(coeffs) != n + 1:
        raise ParseError(f"n={n} needs {n + 1} modulus coefficients, got {len(coeffs)}")
    for pos, c in enumerate(coeffs):
        if not 0 <= c < p:
            raise ParseError(f"modulus coefficient {pos} = {c} outside [0, {p})")
    return make_field(p, coeffs)


def field_from_json(obj) -> Field:
    if isinstance(obj, str):
        return parse_field_spec(obj)
    try:
        p, mod = int(obj["p"]), [int(c) for c in obj["mod"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"field object needs keys p, n, mod: {obj!r}") from exc
    if "n" in obj and int(obj["n"]) != len(mod) - 1:
        raise ParseError(f"n={obj['n']} inconsistent with modulus of degree {len(mod) - 1}")
    return make_field(p, mod)


_GEN_RE = re.compile(r"^\s*-?\s*g\s*\^\s*(-?\d+)\s*$")


def parse_element(field: Field, text) -> FieldElement:
    """Parse ``g^k``, ``[c0,...,c_{n-1}]`` or a bare prime-field integer."""
    if isinstance(text, FieldElement):
        return text
    if isinstance(text, (int, np.integer)):
        return field.scalar(int(text))
    if isinstance(text, (list, tuple)):
        return field.from_coeffs([int(c) for c in text])
    s = str(text).strip()
    m = _GEN_RE.match(s)
    if m:
        e = field.gen_power(int(m.group(1)))
        return -e if s.startswith("-") else e
    if s.startswith("[") and s.endswith("]"):
        try:
            coeffs = [int(c) for c in s[1:-1].split(",") if c.strip()]
        except ValueError as exc:
            raise ParseError(f"bad coordinate in {s!r}") from exc
        return field.from_coeffs(coeffs)
    if re.fullmatch(r"-?\d+", s):
        return field.scalar(int(s))
    raise ParseError(f"cannot parse field element {s!r}; use g^k or [c0,...]")
