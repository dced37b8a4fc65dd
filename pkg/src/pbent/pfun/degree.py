"""Univariate interpolation and algebraic degree (max p-weight of an exponent)."""

from __future__ import annotations

import numpy as np

from ..errors import OutOfRange
from ..galois import Field
from .function import PAryFunction


def p_weight(d: int, p: int, n: int | None = None) -> int:
    """Sum of the base-p digits of d; with n given, d must lie in [0, p^n)."""
    d = int(d)
    if d < 0 or (n is not None and d >= p**n):
        raise OutOfRange(f"{d} outside [0, {p}^{n})")
    w = 0
    while d:
        w += d % p
        d //= p
    return w


def interpolate(field: Field, table) -> np.ndarray:
    """Coefficients c_0..c_(q-1) (field indices) of the unique polynomial of
    degree < q agreeing with ``table`` (values lifted into the prime field).

    Uses f(x) = sum_a f(a) (1 - (x - a)^(q-1)), which gives c_0 = f(0) and
    c_j = -sum_a f(a) a^(q-1-j) for j >= 1 (with 0^0 = 1).
    """
    q, p = field.order, field.p
    table = np.asarray(table, dtype=np.int64) % p
    support = np.flatnonzero(table[1:]) + 1
    vals = table[support]
    logs = field.log(support)
    coeffs = np.zeros(q, dtype=np.int64)
    coeffs[0] = table[0]
    if support.size:
        digits = field.digits
        block = max(1, (1 << 20) // support.size)
        for start in range(1, q, block):
            j = np.arange(start, min(q, start + block), dtype=np.int64)
            e = (logs[None, :] * (q - 1 - j)[:, None]) % (q - 1)
            terms = digits[field._exp[e]] * vals[None, :, None]
            coeffs[j] = field.encode(-terms.sum(axis=1))
    if table[0]:
        # the a = 0 term only survives for j = q - 1
        coeffs[q - 1] = int(field.sub(coeffs[q - 1], int(table[0])))
    return coeffs


def evaluate_poly(field: Field, coeffs, points=None) -> np.ndarray:
    """Evaluate sum_j c_j x^j (c_j field indices) at ``points``."""
    q = field.order
    points = field.elements() if points is None else np.asarray(points, dtype=np.int64)
    coeffs = np.asarray(coeffs, dtype=np.int64)
    nz = np.flatnonzero(coeffs)
    acc = np.zeros(points.shape, dtype=np.int64)
    for j in nz:
        acc = field.add(acc, field.mul(int(coeffs[j]), field.power(points, int(j))))
    return acc


def algebraic_degree(f: PAryFunction) -> int:
    """Maximum p-weight of an exponent with a nonzero coefficient; 0 for f = 0."""
    field = f.domain
    if not isinstance(field, Field):
        raise TypeError("algebraic_degree needs a single-field domain")
    coeffs = interpolate(field, f.table)
    nz = np.flatnonzero(coeffs)
    return max((p_weight(int(j), field.p) for j in nz), default=0)
