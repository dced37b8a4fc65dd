"""Predicted-versus-observed surveys over whole parameter spaces.

Each tuple is turned into a truth table, its spectrum is computed with the
batched fast transform, and the observed plateau class is compared with the
trace-triple prediction.  Sampling draws tuples from numpy's counter-based
Philox generator, so a (seed, size) pair always produces the same tuples.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from .constructions import (
    theorem1_distribution,
    theorem1_triples,
    theorem2_distribution,
    theorem2_triples,
    theorem3_triples,
    verdict_codes,
)
from .constructions.base import kasami_table
from .errors import DegreeTooSmall, InputError, NotTernary, OddDegree
from .galois import Field
from .linpoly import LinearizedPoly, inverse_map, is_permutation_binomial
from .pfun import PairDomain, plateau_summary, verdict_name, walsh_fast_batch

FAMILIES = ("theorem1", "theorem2", "theorem3")
TSV_COLUMNS = ("lambda", "u", "v", "t0", "t1", "t2", "predicted", "observed", "match",
               "amplitude_sq", "zero_count")

DEFAULT_BATCH = 2048


@dataclass
class SurveyRecord:
    params: tuple  # (lambda or pi, u, v) as text
    triple: tuple
    predicted: str
    observed: str
    amplitude_sq: int
    zero_count: int

    @property
    def match(self) -> bool:
        return self.predicted == self.observed

    def tsv(self) -> str:
        cols = [*self.params, *(str(t) for t in self.triple), self.predicted, self.observed,
                "true" if self.match else "false", str(self.amplitude_sq), str(self.zero_count)]
        return "\t".join(cols)


@dataclass
class SurveyResult:
    family: str
    field: Field
    records: list = dc_field(default_factory=list)
    distribution_checked: int = 0
    distribution_failed: int = 0

    @property
    def mismatches(self) -> int:
        return sum(not r.match for r in self.records)

    def cells(self) -> Counter:
        """(triple, observed verdict) -> number of tuples."""
        return Counter((r.triple, r.observed) for r in self.records)

    def header(self) -> str:
        cols = list(TSV_COLUMNS)
        if self.family == "theorem3":
            cols[0] = "pi"
        return "\t".join(cols)

    def write_tsv(self, path):
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.header() + "\n")
            for r in self.records:
                fh.write(r.tsv() + "\n")

    def summary_lines(self):
        yield f"family\t{self.family}"
        yield f"field\t{self.field.spec()}"
        yield f"records\t{len(self.records)}"
        yield f"mismatches\t{self.mismatches}"
        yield f"distribution_checks\t{self.distribution_checked}"
        yield f"distribution_failures\t{self.distribution_failed}"
        for (triple, observed), count in sorted(self.cells().items()):
            t = "".join(str(x) for x in triple)
            yield f"cell\t{t}\t{observed}\t{count}"

    @property
    def ok(self) -> bool:
        return self.mismatches == 0 and self.distribution_failed == 0


# -- parameter spaces ----------------------------------------------------------

def _element_text(field: Field, i: int) -> str:
    i = int(i)
    if i == 0:
        return "0"
    if field.primitive:
        return f"g^{int(field.log(i))}"
    return field.format_element(i, annotate=False)


def _pair_text(dom: PairDomain, i: int) -> str:
    a, b = dom.split(int(i))
    return f"({_element_text(dom.field, a)},{_element_text(dom.field, b)})"


def theorem3_permutations(field: Field) -> list:
    """y^(3^i) for 0 <= i < k, then every permutation binomial y^(3^r) + a y."""
    out = [LinearizedPoly.frobenius_power(field, i) for i in range(field.n)]
    for r in range(1, field.n):
        for a in range(1, field.order):
            if is_permutation_binomial(field.element(a), r):
                out.append(LinearizedPoly.from_terms(field, {r: 1, 0: a}))
    return out


def _check_family(family: str, field: Field):
    if family not in FAMILIES:
        raise InputError(f"unknown survey family {family!r}; choose from {', '.join(FAMILIES)}")
    if field.p != 3:
        raise NotTernary("surveys cover ternary constructions only")
    if family == "theorem1":
        if field.n % 2:
            raise OddDegree("theorem1 needs an even extension degree")
        if field.n < 4:
            raise DegreeTooSmall("theorem1 predictions need k > 1")
    if family == "theorem2" and field.n <= 3:
        raise DegreeTooSmall("theorem2 predictions need n > 3")


def parameter_axes(family: str, field: Field):
    """The three ascending index lists (first, u, v) of the parameter space."""
    q = field.order
    if family == "theorem1":
        k = field.n // 2
        nz = np.arange(1, q, dtype=np.int64)
        lams = nz[field.in_subfield(nz, k)]
        return lams, nz, nz
    if family == "theorem2":
        nz = np.arange(1, q, dtype=np.int64)
        return nz, nz, nz
    pis = np.arange(len(theorem3_permutations(field)), dtype=np.int64)
    nz = np.arange(1, q * q, dtype=np.int64)
    return pis, nz, nz


def enumerate_tuples(family: str, field: Field, sample: int | None = None, seed: int = 0):
    """Arrays (first, u, v) in survey order.

    Exhaustive order is ascending lexicographic in (first, u, v); a sample
    draws each coordinate uniformly from Philox(seed), in draw order.
    """
    axes = parameter_axes(family, field)
    if sample is None:
        grids = np.meshgrid(*axes, indexing="ij")
        return tuple(g.ravel() for g in grids)
    if sample < 0:
        raise InputError("sample size must be nonnegative")
    rng = np.random.Generator(np.random.Philox(seed))
    picks = rng.integers(0, [len(a) for a in axes], size=(int(sample), 3))
    return tuple(axes[j][picks[:, j]] for j in range(3))


# -- evaluation -----------------------------------------------------------------

class _Evaluator:
    def __init__(self, family, field):
        self.family = family
        self.field = field
        x = field.elements()
        if family in ("theorem1", "theorem2"):
            self.domain = field
            self.linear = field.pairing(x[:, None], x[None, :])  # Tr(u x), row u
            self._base = {}
        else:
            self.domain = PairDomain(field)
            self.pis = theorem3_permutations(field)
            self.inverses = [inverse_map(pi.table()) for pi in self.pis]
            dom = self.domain
            xs, ys = dom.split(dom.elements())
            tr_y = field.tr(ys)
            self.bases = [(field.pairing(xs, pi.table()[ys]) + tr_y) % 3 for pi in self.pis]
        self.set_name = "B" if family == "theorem2" else "A"

    def base(self, lam):
        lam = int(lam)
        if lam not in self._base:
            f, x = self.field, self.field.elements()
            if self.family == "theorem1":
                self._base[lam] = kasami_table(f, lam)
            else:
                self._base[lam] = f.tr(f.mul(lam, f.mul(x, x)))
        return self._base[lam]

    def triples(self, first, u, v):
        if self.family == "theorem1":
            return self._grouped(theorem1_triples, first, u, v)
        if self.family == "theorem2":
            return self._grouped(theorem2_triples, first, u, v)
        out = np.zeros((3, first.size), dtype=np.int64)
        for pi_i in np.unique(first):
            sel = first == pi_i
            out[:, sel] = np.asarray(
                theorem3_triples(self.pis[pi_i], u[sel], v[sel], self.inverses[pi_i])
            )
        return out

    def _grouped(self, fn, first, u, v):
        out = np.zeros((3, first.size), dtype=np.int64)
        for lam in np.unique(first):
            sel = first == lam
            out[:, sel] = np.asarray(fn(self.field, int(lam), u[sel], v[sel]))
        return out

    def tables(self, first, u, v):
        if self.family == "theorem3":
            dom = self.domain
            x = dom.elements()
            lu = dom.pairing(u[:, None], x[None, :])
            lv = dom.pairing(v[:, None], x[None, :])
            base = np.stack([self.bases[i] for i in first])
        else:
            lu, lv = self.linear[u], self.linear[v]
            base = np.stack([self.base(l) for l in first])
        return (base + lu * lv) % 3

    def first_text(self, i):
        if self.family == "theorem3":
            return str(self.pis[int(i)])
        return _element_text(self.field, i)

    def uv_text(self, i):
        if self.family == "theorem3":
            return _pair_text(self.domain, i)
        return _element_text(self.field, i)

    def expected_distribution(self, lam):
        n = self.field.n
        if self.family == "theorem1":
            return theorem1_distribution(n // 2)
        if self.family == "theorem2":
            return theorem2_distribution(n, int(self.field.eta(int(lam))))
        return None


def _distribution_counts(values: np.ndarray) -> Counter:
    rows, counts = np.unique(values, axis=0, return_counts=True)
    return Counter({tuple(int(c) for c in r): int(k) for r, k in zip(rows, counts)})


def _run_batch(ev: _Evaluator, first, u, v):
    t = ev.triples(first, u, v)
    pred = verdict_codes(t[0], t[1], t[2], ev.set_name)
    values = walsh_fast_batch(ev.tables(first, u, v), ev.domain)
    s, amp, zc = plateau_summary(values, 3, ev.domain.dim)
    checked = failed = 0
    for b in np.flatnonzero((pred == 2) & (s == 2)):
        expected = ev.expected_distribution(first[b])
        if expected is None:
            continue
        checked += 1
        want = Counter({tuple(k.coeffs): c for k, c in expected.entries})
        if _distribution_counts(values[b]) != want:
            failed += 1
    records = [
        SurveyRecord(
            (ev.first_text(first[i]), ev.uv_text(u[i]), ev.uv_text(v[i])),
            (int(t[0, i]), int(t[1, i]), int(t[2, i])),
            verdict_name(int(pred[i])),
            verdict_name(None if s[i] < 0 else int(s[i])),
            int(amp[i]),
            int(zc[i]),
        )
        for i in range(first.size)
    ]
    return records, checked, failed


def run_survey(
    family: str,
    field: Field,
    sample: int | None = None,
    seed: int = 0,
    workers: int = 1,
    batch: int = DEFAULT_BATCH,
) -> SurveyResult:
    """Survey ``family`` over ``field``: exhaustive when ``sample`` is None.

    Batches may run on ``workers`` threads; records are merged in tuple order,
    so the result does not depend on the worker count.
    """
    _check_family(family, field)
    first, u, v = enumerate_tuples(family, field, sample, seed)
    ev = _Evaluator(family, field)
    if family == "theorem3":
        # pair-domain tables are q^2 long; keep batches to a similar footprint
        batch = max(1, min(batch, (1 << 22) // ev.domain.size))
    starts = list(range(0, first.size, batch))

    def job(s):
        sl = slice(s, s + batch)
        return _run_batch(ev, first[sl], u[sl], v[sl])

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(job, starts))
    else:
        parts = [job(s) for s in starts]
    result = SurveyResult(family, field)
    for records, checked, failed in parts:
        result.records.extend(records)
        result.distribution_checked += checked
        result.distribution_failed += failed
    return result
