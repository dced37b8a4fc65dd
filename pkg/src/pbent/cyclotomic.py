"""Exact arithmetic in Z[w], w a primitive p-th root of unity, p an odd prime.

Values are kept in the canonical basis 1, w, ..., w^(p-2): a sum
sum_j c_j w^j over all p exponents is reduced by subtracting c_(p-1) from
every coordinate (using 1 + w + ... + w^(p-1) = 0).  Canonical forms are
unique, so equality and "is a rational integer" are coordinate checks.

Two layers live here: the scalar :class:`CyclotomicInt` with Python-int
coordinates, and array kernels (``canonical``, ``extend``, ``norm_sq`` ...)
that process whole spectra stored as int64 arrays of shape ``(..., p-1)``.
"""

from __future__ import annotations

import cmath
import math
import re

import numpy as np

from .errors import MixedRootOrder, ParseError

# int64 headroom guard for the array kernels
_COEFF_LIMIT = 2**31


class NonRational:
    """Result of :meth:`CyclotomicInt.magnitude_squared` when z*conj(z) is not in Z.

    |z|^2 is always real, and for p = 3 always an integer; for larger p it can
    be irrational (e.g. |1 + w|^2 for p = 5).  The full canonical product is kept.
    """

    __slots__ = ("value",)

    def __init__(self, value: "CyclotomicInt"):
        self.value = value

    def __eq__(self, other):
        return isinstance(other, NonRational) and other.value == self.value

    def __hash__(self):
        return hash(("NonRational", self.value))

    def __repr__(self):
        return f"NonRational({self.value})"


class CyclotomicInt:
    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) == p:
            top = coeffs[-1]
            coeffs = [c - top for c in coeffs[:-1]]
        elif len(coeffs) < p - 1:
            coeffs = coeffs + [0] * (p - 1 - len(coeffs))
        elif len(coeffs) != p - 1:
            raise ValueError(f"need p-1 or p coordinates for p={p}, got {len(coeffs)}")
        self.p = int(p)
        self.coeffs = tuple(coeffs)

    # -- constructors
    @classmethod
    def from_exponents(cls, p, counts):
        """sum_j counts[j] * w^j for j in [0, p)."""
        return cls(p, list(counts))

    @classmethod
    def integer(cls, p, c):
        return cls(p, [c])

    @classmethod
    def root(cls, p, j, scale=1):
        """scale * w^j."""
        ext = [0] * p
        ext[j % p] = scale
        return cls(p, ext)

    @classmethod
    def zero(cls, p):
        return cls(p, [0])

    @classmethod
    def gauss_sum(cls, p):
        """sum_{j=1}^{p-1} (j/p) w^j: sqrt(p) if p = 1 mod 4, i*sqrt(p) if p = 3 mod 4."""
        ext = [0] * p
        for j in range(1, p):
            ext[j] = 1 if pow(j, (p - 1) // 2, p) == 1 else -1
        return cls(p, ext)

    def extended(self) -> list[int]:
        return list(self.coeffs) + [0]

    # -- ring operations
    def _check(self, other):
        if isinstance(other, int):
            return CyclotomicInt.integer(self.p, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        if other.p != self.p:
            raise MixedRootOrder(f"cannot combine roots of order {self.p} and {other.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.p
        ext = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    ext[(i + j) % p] += a * b
        return CyclotomicInt(p, ext)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not ring elements")
        r, b = CyclotomicInt.integer(self.p, 1), self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def scale(self, c: int):
        return CyclotomicInt(self.p, [c * a for a in self.coeffs])

    def exact_div(self, c: int):
        """Divide by a rational integer; every coordinate must be divisible."""
        if any(a % c for a in self.coeffs):
            raise ArithmeticError(f"{self} is not divisible by {c}")
        return CyclotomicInt(self.p, [a // c for a in self.coeffs])

    def mul_root(self, j: int):
        """Multiply by w^j (a cyclic shift of the extended coordinates)."""
        p, ext = self.p, self.extended()
        j %= p
        return CyclotomicInt(p, [ext[(i - j) % p] for i in range(p)])

    def conjugate(self):
        """Apply w -> w^(-1)."""
        p, ext = self.p, self.extended()
        return CyclotomicInt(p, [ext[(-i) % p] for i in range(p)])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def magnitude_squared(self):
        """z * conj(z) as an int, or :class:`NonRational` carrying the product."""
        prod = self * self.conjugate()
        if prod.is_rational():
            return prod.coeffs[0]
        return NonRational(prod)

    def to_complex(self) -> complex:
        return sum(c * cmath.exp(2j * math.pi * k / self.p) for k, c in enumerate(self.coeffs))

    def as_root_multiple(self):
        """Return (c, j) with self == c * w^j for a rational c, else None."""
        for j in range(self.p):
            z = self.mul_root(-j)
            if z.is_rational():
                return z.coeffs[0], j
        return None

    # -- comparison and text
    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        return isinstance(other, CyclotomicInt) and other.p == self.p and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"CyclotomicInt({self.p}, {list(self.coeffs)})"

    def __str__(self):
        return format_cyclotomic(self.p, self.coeffs)


def format_cyclotomic(p, coeffs) -> str:
    """``c0 + c1*w + ... + c_{p-2}*w^{p-2}`` with zero terms omitted; ``0`` for zero."""
    parts = []
    for k, c in enumerate(coeffs):
        c = int(c)
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            term = str(mag)
        else:
            mono = "w" if k == 1 else f"w^{k}"
            term = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(w(?:\^(\d+))?)?")


def parse_cyclotomic(p: int, text: str) -> CyclotomicInt:
    """Inverse of :func:`format_cyclotomic` (also accepts exponents up to p-1)."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty cyclotomic text")
    ext = [0] * p
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse {text!r} at position {pos}")
        sign, num, mono, exp = m.groups()
        if not num and not mono:
            raise ParseError(f"dangling sign in {text!r}")
        c = int(num) if num else 1
        k = 0 if not mono else (int(exp) if exp else 1)
        if k >= p:
            raise ParseError(f"exponent {k} not below p={p}")
        ext[k] += -c if sign == "-" else c
        pos = m.end()
    return CyclotomicInt(p, ext)


# -- array kernels -------------------------------------------------------------

def canonical(ext: np.ndarray) -> np.ndarray:
    """(..., p) exponent-basis coordinates -> (..., p-1) canonical."""
    ext = np.asarray(ext, dtype=np.int64)
    return ext[..., :-1] - ext[..., -1:]


def extend(can: np.ndarray) -> np.ndarray:
    """(..., p-1) canonical -> (..., p) with a trailing zero."""
    can = np.asarray(can, dtype=np.int64)
    pad = np.zeros(can.shape[:-1] + (1,), dtype=np.int64)
    return np.concatenate([can, pad], axis=-1)


def norm_sq_canonical(can: np.ndarray) -> np.ndarray:
    """Canonical coordinates of z * conj(z) for every row."""
    z = extend(can)
    if z.size and np.abs(z).max() >= _COEFF_LIMIT:
        raise OverflowError("cyclotomic coordinates too large for int64 product")
    p = z.shape[-1]
    # coefficient of w^k in z * conj(z) is sum_i z_i z_(i-k)
    m = np.stack([np.sum(z * np.roll(z, k, axis=-1), axis=-1) for k in range(p)], axis=-1)
    return canonical(m)


def norm_sq(can: np.ndarray):
    """Exact |z|^2 for every row.

    Returns ``(values, rational)``: ``values`` holds the rational integer where
    ``rational`` is true (and the constant coordinate elsewhere).
    """
    m = norm_sq_canonical(can)
    return m[..., 0], ~np.any(m[..., 1:], axis=-1)


def mul_root_array(can: np.ndarray, j) -> np.ndarray:
    """Multiply each row by w^j (j scalar or broadcastable per-row array)."""
    z = extend(can)
    p = z.shape[-1]
    j = np.asarray(j, dtype=np.int64) % p
    src = (np.arange(p)[None, :] - np.reshape(j, (-1, 1))) % p
    flat = z.reshape(-1, p)
    if src.shape[0] == 1:
        out = flat[:, src[0]]
    else:
        out = np.take_along_axis(flat, src, axis=1)
    return canonical(out.reshape(z.shape))


def mul_array(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Rowwise product of canonical arrays (broadcasting over leading axes)."""
    za, zb = extend(a), extend(b)
    p = za.shape[-1]
    shape = np.broadcast_shapes(za.shape, zb.shape)
    out = np.zeros(shape, dtype=np.int64)
    for i in range(p):
        for j in range(p):
            out[..., (i + j) % p] += za[..., i] * zb[..., j]
    return canonical(out)


def to_complex_array(can: np.ndarray) -> np.ndarray:
    can = np.asarray(can, dtype=np.float64)
    p = can.shape[-1] + 1
    roots = np.exp(2j * np.pi * np.arange(p - 1) / p)
    return can @ roots


def from_array(p: int, row) -> CyclotomicInt:
    return CyclotomicInt(p, [int(c) for c in row])
