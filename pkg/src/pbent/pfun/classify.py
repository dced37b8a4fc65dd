"""Bent / s-plateaued classification, regularity and duals.

Everything is decided from exact |chi(a)|^2 in Z[w].  Near-bent amplitudes
p^((n+1)/2) are irrational but their squares are integers, so the plateau test
|chi(a)|^2 in {0, p^(n+s)} is exact.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .. import cyclotomic as cyc
from ..cyclotomic import CyclotomicInt
from ..errors import NotBent
from .function import PAryFunction
from .walsh import WalshSpectrum

BENT = "bent"
NOT_PLATEAUED = "not-plateaued"

REGULAR = "regular"
WEAKLY_REGULAR = "weakly-regular"
NOT_WEAKLY_REGULAR = "not-weakly-regular"
NOT_APPLICABLE = "not-applicable"


def verdict_name(s: Optional[int]) -> str:
    """Label for an s-plateaued verdict; ``None`` means not plateaued."""
    if s is None:
        return NOT_PLATEAUED
    if s == 0:
        return BENT
    if s == 1:
        return "near-bent"
    return f"{s}-plateaued"


def _plateau_exponent(value: int, p: int, n: int) -> Optional[int]:
    """s >= 0 with value == p^(n+s), else None."""
    if value <= 0:
        return None
    e = 0
    while value % p == 0:
        value //= p
        e += 1
    if value != 1 or e < n:
        return None
    return e - n


@dataclass
class Classification:
    verdict: str
    s: Optional[int]
    amplitude_sq: Optional[int]
    zero_count: int
    regularity: str = NOT_APPLICABLE
    mu: Optional[CyclotomicInt] = None  # mu * p^(n/2), exact
    mu_complex: Optional[complex] = None
    dual: Optional[PAryFunction] = None
    witness: Optional[int] = None  # an index violating the plateau property
    degenerate: bool = False  # s == n: the spectrum is supported on one point

    @property
    def is_bent(self):
        return self.s == 0

    def report(self, include_dual: bool = False) -> dict:
        out = {
            "schema": 1,
            "verdict": self.verdict,
            "s": self.s,
            "amplitude_sq": self.amplitude_sq,
            "zero_count": self.zero_count,
            "regularity": self.regularity,
            "mu_complex": None
            if self.mu_complex is None
            else [round(self.mu_complex.real, 12), round(self.mu_complex.imag, 12)],
        }
        if self.degenerate:
            out["note"] = "s=n degenerate"
        if self.witness is not None:
            out["witness"] = self.witness
        if include_dual and self.dual is not None:
            out["dual_table"] = [int(v) for v in self.dual.table]
        return out


def plateau_summary(values: np.ndarray, p: int, n: int):
    """Classify many spectra at once.

    ``values`` has shape (B, size, p-1).  Returns arrays ``s`` (-1 for not
    plateaued), ``amplitude_sq`` and ``zero_count``.
    """
    mags, rational = cyc.norm_sq(values)
    B = values.shape[0]
    zero = (mags == 0) & rational
    zero_count = zero.sum(axis=1)
    amp = np.where(zero, 0, mags).max(axis=1)
    ok = np.all(rational, axis=1) & np.all(zero | (mags == amp[:, None]), axis=1)
    s = np.full(B, -1, dtype=np.int64)
    for b in np.flatnonzero(ok):
        e = _plateau_exponent(int(amp[b]), p, n)
        if e is not None and (e > 0 or zero_count[b] == 0):
            s[b] = e
    return s, amp, zero_count


def classify(spectrum: WalshSpectrum, dual: bool = True) -> Classification:
    """Exact verdict for one spectrum; bent spectra also get regularity and dual."""
    p, n = spectrum.p, spectrum.n
    mags, rational = spectrum.magnitudes_sq()
    zero = rational & (mags == 0)
    zero_count = int(zero.sum())
    nonrational = np.flatnonzero(~rational)
    if nonrational.size:
        return Classification(NOT_PLATEAUED, None, None, zero_count, witness=int(nonrational[0]))
    amp = int(np.where(zero, 0, mags).max())
    bad = np.flatnonzero(~zero & (mags != amp))
    s = _plateau_exponent(amp, p, n)
    if bad.size or s is None or (s == 0 and zero_count):
        w = int(bad[0]) if bad.size else int(np.flatnonzero(~zero)[0])
        return Classification(NOT_PLATEAUED, None, amp, zero_count, witness=w)
    c = Classification(verdict_name(s), s, amp, zero_count, degenerate=(s == n and n > 0))
    if s == 0 and dual:
        c.regularity, c.mu, c.mu_complex, c.dual = _regularity(spectrum)
    return c


def _normalized_root(c: CyclotomicInt, p: int):
    """Pick t0 so that mu = c w^(-t0) / p^(n/2) is canonical.

    Preference: a real multiple (mu = +-1), then a purely imaginary one
    (mu = +-i), then the unique argument in [0, 2 pi / p).  At most one real
    and at most one imaginary candidate exist because p is odd.
    """
    cands = [c.mul_root(-t) for t in range(p)]
    for t, z in enumerate(cands):
        if z == z.conjugate():
            return t, z
    for t, z in enumerate(cands):
        if z == -z.conjugate():
            return t, z
    width = 2 * math.pi / p
    for t, z in enumerate(cands):
        arg = cmath.phase(z.to_complex()) % (2 * math.pi)
        if arg < width - 1e-12 or arg > 2 * math.pi - 1e-12:
            return t, z
    raise AssertionError("no normalised candidate found")


def _regularity(spectrum: WalshSpectrum):
    p, n = spectrum.p, spectrum.n
    c = spectrum[0]
    # rows of c * w^t for every t
    shifted = np.stack([cyc.mul_root_array(spectrum.values[:1], t)[0] for t in range(p)])
    match = np.all(spectrum.values[:, None, :] == shifted[None, :, :], axis=2)
    if not np.all(match.any(axis=1)):
        return NOT_WEAKLY_REGULAR, None, None, None
    t_of_a = match.argmax(axis=1)
    t0, mu_exact = _normalized_root(c, p)
    # chi(a) = c w^t(a) = (c w^-t0) w^(t(a) + t0)
    dual = PAryFunction(spectrum.domain, (t_of_a + t0) % p, name="dual")
    mu_complex = mu_exact.to_complex() / p ** (n / 2)
    regular = mu_exact == mu_exact.conjugate() and mu_complex.real > 0
    return (REGULAR if regular else WEAKLY_REGULAR), mu_exact, mu_complex, dual


def regularity_and_dual(spectrum: WalshSpectrum):
    """(regularity, dual) for a bent spectrum; raises NotBent otherwise."""
    c = classify(spectrum, dual=False)
    if c.s != 0:
        raise NotBent(f"spectrum is {c.verdict}, not bent")
    reg, mu, mu_complex, dual = _regularity(spectrum)
    return reg, dual
