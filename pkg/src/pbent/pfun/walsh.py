"""Exact Walsh transforms chi_f(a) = sum_x w^(f(x) - <a, x>).

Both paths return canonical Z[w] coordinates, shape ``(size, p-1)``:

* :func:`walsh_naive` counts, for every ``a``, how many ``x`` give each
  exponent ``f(x) - <a, x>``; the pairing is evaluated with field products.
* :func:`walsh_fast` runs ``dim`` stages of p-point butterflies on the
  exponent-basis vectors (multiplication by w^t is a cyclic shift) and then
  re-indexes through the Gram matrix of the pairing.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .. import cyclotomic as cyc
from ..cyclotomic import CyclotomicInt
from ..errors import InvariantViolation
from .function import PAryFunction

# target number of int64 entries per naive chunk
_CHUNK_ENTRIES = 1 << 22


class WalshSpectrum:
    """Walsh coefficients of a function, in canonical cyclotomic coordinates."""

    def __init__(self, domain, values: np.ndarray):
        values = np.asarray(values, dtype=np.int64)
        if values.shape != (domain.size, domain.p - 1):
            raise ValueError(f"spectrum shape {values.shape} does not fit the domain")
        values = values.copy()
        values.setflags(write=False)
        self.domain = domain
        self.values = values

    @property
    def p(self):
        return self.domain.p

    @property
    def n(self):
        return self.domain.dim

    def __len__(self):
        return self.domain.size

    def __getitem__(self, a) -> CyclotomicInt:
        a = getattr(a, "index", a)
        return cyc.from_array(self.p, self.values[int(a)])

    def __eq__(self, other):
        return (
            isinstance(other, WalshSpectrum)
            and other.domain == self.domain
            and np.array_equal(other.values, self.values)
        )

    def magnitudes_sq(self):
        """(values, rational) from :func:`pbent.cyclotomic.norm_sq`."""
        return cyc.norm_sq(self.values)

    def parseval_sum(self) -> CyclotomicInt:
        return cyc.from_array(self.p, cyc.norm_sq_canonical(self.values).sum(axis=0))

    def parseval_ok(self) -> bool:
        return self.parseval_sum() == self.p ** (2 * self.n)

    def inversion_table(self) -> np.ndarray:
        """sum_a chi(a) w^<a, x> for every x (canonical rows); equals p^n w^f(x)."""
        return invert_spectrum(self.domain, self.values)

    def inversion_ok(self, f: PAryFunction) -> bool:
        expected = np.zeros((self.domain.size, self.p), dtype=np.int64)
        expected[np.arange(self.domain.size), f.table] = self.p**self.n
        return np.array_equal(self.inversion_table(), cyc.canonical(expected))

    def distribution(self) -> Counter:
        """Multiset of values as a Counter keyed by CyclotomicInt."""
        rows, counts = np.unique(self.values, axis=0, return_counts=True)
        return Counter({cyc.from_array(self.p, r): int(c) for r, c in zip(rows, counts)})

    def to_complex(self) -> np.ndarray:
        return cyc.to_complex_array(self.values)

    def tsv_lines(self):
        """``index, element, cyclotomic text, |chi|^2`` rows (irrational |chi|^2 as text)."""
        mags = cyc.norm_sq_canonical(self.values)
        for i in range(self.domain.size):
            m = mags[i]
            mag = str(int(m[0])) if not np.any(m[1:]) else cyc.format_cyclotomic(self.p, m)
            yield "\t".join(
                [
                    str(i),
                    self.domain.format_element(i, annotate=False),
                    cyc.format_cyclotomic(self.p, self.values[i]),
                    mag,
                ]
            )

    def write_tsv(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("index\telement\tvalue\tmagnitude_squared\n")
            for line in self.tsv_lines():
                fh.write(line + "\n")


def check_spectrum(f: PAryFunction, spectrum: WalshSpectrum, inversion: bool = True):
    if not spectrum.parseval_ok():
        raise InvariantViolation(f"Parseval fails for {f!r}: sum = {spectrum.parseval_sum()}")
    if inversion and not spectrum.inversion_ok(f):
        raise InvariantViolation(f"Walsh inversion does not recover {f!r}")


# -- naive path ----------------------------------------------------------------

def _naive_rows(domain, table, rows):
    p = domain.p
    x = domain.elements()
    exps = (table[None, :] - domain.pairing(rows[:, None], x[None, :])) % p
    counts = np.stack([(exps == j).sum(axis=1) for j in range(p)], axis=1)
    return cyc.canonical(counts)


def walsh_naive(f: PAryFunction, check: bool = True, workers: int = 1) -> WalshSpectrum:
    """Direct O(size^2) evaluation of every Walsh coefficient.

    ``workers > 1`` splits the ``a`` range into chunks evaluated on threads;
    each chunk writes its own rows, so the output does not depend on it.
    """
    domain = f.domain
    q = domain.size
    chunk = max(1, _CHUNK_ENTRIES // q)
    out = np.empty((q, domain.p - 1), dtype=np.int64)
    starts = range(0, q, chunk)

    def run(s):
        rows = np.arange(s, min(q, s + chunk), dtype=np.int64)
        out[rows] = _naive_rows(domain, f.table, rows)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, starts))
    else:
        for s in starts:
            run(s)
    spec = WalshSpectrum(domain, out)
    if check:
        check_spectrum(f, spec)
    return spec


# -- fast path -----------------------------------------------------------------

def _butterflies(ext: np.ndarray, p: int, dim: int, sign: int) -> np.ndarray:
    """Apply sum_x w^(sign * b.x) over Z_p^dim to ``ext`` of shape (B, size, p)."""
    batch = ext.shape[0]
    X = ext.reshape((batch,) + (p,) * dim + (p,))
    for ax in range(1, dim + 1):
        slices = [np.take(X, x, axis=ax) for x in range(p)]
        outs = []
        for b in range(p):
            acc = slices[0].copy()
            for x in range(1, p):
                acc += np.roll(slices[x], (sign * b * x) % p, axis=-1)
            outs.append(acc)
        X = np.stack(outs, axis=ax)
    return X.reshape(batch, p**dim, p)


def _gram_index(domain) -> np.ndarray:
    """Index of G a for every a, so that <a, x> = (G a) . x."""
    g = (domain.digits @ domain.gram.T) % domain.p
    return domain.encode(g)


def walsh_fast_batch(tables: np.ndarray, domain) -> np.ndarray:
    """Walsh spectra of many functions at once: (B, size) -> (B, size, p-1)."""
    tables = np.asarray(tables, dtype=np.int64)
    if tables.ndim == 1:
        tables = tables[None, :]
    p, q = domain.p, domain.size
    ext = np.zeros((tables.shape[0], q, p), dtype=np.int64)
    np.put_along_axis(ext, (tables % p)[:, :, None], 1, axis=2)
    # w^(f(x) - b.x): multiplying by w^(-bx) moves exponent e to e - bx
    W = _butterflies(ext, p, domain.dim, sign=-1)
    return cyc.canonical(W[:, _gram_index(domain), :])


def walsh_fast(f: PAryFunction, check: bool = True) -> WalshSpectrum:
    spec = WalshSpectrum(f.domain, walsh_fast_batch(f.table, f.domain)[0])
    if check:
        check_spectrum(f, spec)
    return spec


def invert_spectrum(domain, values: np.ndarray) -> np.ndarray:
    """sum_a chi(a) w^<a, x>, evaluated with butterflies."""
    p, q = domain.p, domain.size
    ext = np.zeros((1, q, p), dtype=np.int64)
    ext[0, _gram_index(domain)] = cyc.extend(values)
    return cyc.canonical(_butterflies(ext, p, domain.dim, sign=+1)[0])


def walsh(f: PAryFunction, method: str = "fast", check: bool = True) -> WalshSpectrum:
    if method == "fast":
        return walsh_fast(f, check=check)
    if method == "naive":
        return walsh_naive(f, check=check)
    raise ValueError(f"unknown Walsh method {method!r}")
