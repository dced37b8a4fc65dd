"""One test per acceptance criterion, each printing a single pass/fail line."""

import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from pbent import constructions as C
from pbent import fixtures as fx
from pbent.cyclotomic import parse_cyclotomic
from pbent.galois import find_primitive_modulus, make_field
from pbent.linpoly import (
    LinearizedPoly,
    binomial,
    inverse_binomial,
    inverse_binomial_half,
    is_permutation_binomial,
)
from pbent.pfun import (
    PairDomain,
    algebraic_degree,
    classify,
    random_function,
    walsh_fast,
    walsh_naive,
)
from pbent.survey import run_survey
from pbent.verify import trace_square_candidates


class Criterion:
    """Times a criterion and records its pass/fail line."""

    def __init__(self, number, limit=None):
        self.number = number
        self.limit = limit
        self.failures = []
        self.passed = 0
        self.summary = ""

    def check(self, ok, what):
        if ok:
            self.passed += 1
        else:
            self.failures.append(what)
        return ok

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        secs = time.perf_counter() - self.t0
        if exc is not None:
            self.failures.append(f"{type(exc).__name__}: {exc}")
        if self.limit is not None and secs > self.limit:
            self.failures.append(f"runtime {secs:.1f}s over {self.limit}s")
        status = "PASS" if not self.failures else "FAIL"
        detail = "; ".join(self.failures[:5]) if self.failures else f"{self.passed} checks; {self.summary}"
        line = f"criterion {self.number}: {status} ({secs:.2f}s) {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return False

    def finish(self):
        assert not self.failures, self.failures


def _text_dist(d):
    return {parse_cyclotomic(3, k): v for k, v in d.items()}


def _product_case(ex, case):
    """(triple, predicted verdict, function) for one case of a worked product example."""
    F = ex.field()
    g = F.gen_power
    if ex.family == "theorem3":
        dom = PairDomain(F)
        u = dom.index(g(case.u[0]), g(case.u[1]))
        v = dom.index(g(case.v[0]), g(case.v[1]))
        triple, pred = C.theorem3_predict(fx.mm_pi(F), u, v)
        return triple.astuple(), pred.verdict, C.theorem3_function(fx.mm_pi(F), u, v)
    predict = C.theorem1_predict if ex.family == "theorem1" else C.theorem2_predict
    build = C.theorem1_function if ex.family == "theorem1" else C.theorem2_function
    args = (F, g(ex.lam), g(case.u), g(case.v))
    triple, pred = predict(*args)
    return triple.astuple(), pred.verdict, build(*args)


def _indicator_function(ex):
    F = ex.field()
    build = C.theorem4 if ex.family == "theorem4" else C.theorem5
    return build(F, F.gen_power(ex.lam), F.gen_power(ex.u))


def _check_product_example(c, ex, method):
    verdicts = []
    for case in ex.cases:
        triple, pred, f = _product_case(ex, case)
        spec = method(f)
        verdict = classify(spec).verdict
        verdicts.append(f"{triple} {verdict}")
        c.check(triple == case.triple, f"{case.label} triple {triple}")
        c.check(pred == case.verdict == verdict, f"{case.label} {pred}/{verdict}")
        if case.verdict == "2-plateaued" and ex.distribution is not None:
            c.check(spec.distribution() == _text_dist(ex.distribution), f"{case.label} counts")
    c.summary = ", ".join(verdicts)


def test_criterion_1_kasami_product_example():
    with Criterion(1, limit=5) as c:
        _check_product_example(c, fx.KASAMI_PRODUCT, walsh_naive)
        c.check(C.theorem1_distribution(3).as_counter() == _text_dist(fx.KASAMI_PRODUCT.distribution),
                "table for k=3 equals the fixture counts")
    c.finish()


def test_criterion_2_sidelnikov_product_example():
    with Criterion(2, limit=1) as c:
        _check_product_example(c, fx.SIDELNIKOV_PRODUCT, walsh_naive)
        F = fx.field_3_4()
        eta = int(F.eta(F.gen_power(fx.SIDELNIKOV_PRODUCT.lam).index))
        c.check(C.theorem2_distribution(4, eta).as_counter()
                == _text_dist(fx.SIDELNIKOV_PRODUCT.distribution), "table for n=4")
    c.finish()


def test_criterion_3_maiorana_mcfarland_example():
    F = fx.field_3_4()
    with Criterion("3 (fast)", limit=5) as c:
        inv = inverse_binomial(F.gen_power(1), 2)
        c.check(inv.coeffs == fx.mm_pi_inverse_closed_form(F).coeffs, "inverse of pi coefficient-exact")
        c.check(fx.mm_pi(F).compose(inv) == LinearizedPoly.identity(F), "pi o inverse = id")
        _check_product_example(c, fx.MM_PRODUCT, walsh_fast)
        c.summary = "inverse of pi coefficient-exact; " + c.summary
    c.finish()
    with Criterion("3 (naive)", limit=60) as c2:
        _check_product_example(c2, fx.MM_PRODUCT, walsh_naive)
    c2.finish()


def test_criterion_4_kasami_indicator_example():
    ex = fx.KASAMI_INDICATOR
    with Criterion(4, limit=30) as c:
        F = ex.field()
        con = _indicator_function(ex)
        c.check(con.report.holds, str(con.report))
        spec = walsh_naive(con.function)
        cl = classify(spec)
        c.check(cl.verdict == "bent" and cl.regularity == "weakly-regular",
                f"{cl.verdict}, {cl.regularity}")
        c.check(np.array_equal(spec.values, con.oracle_table()), f"closed form at all {F.order} points")
        deg = algebraic_degree(con.function)
        c.check(deg == 7, f"degree {deg}")
        c.summary = f"{cl.verdict}, {cl.regularity}, closed form at all {F.order} points, degree {deg}"
    c.finish()


def test_criterion_5_sidelnikov_indicator_example():
    ex = fx.SIDELNIKOV_INDICATOR
    with Criterion(5, limit=2) as c:
        F = ex.field()
        con = _indicator_function(ex)
        c.check(con.report.holds, str(con.report))
        cl = classify(walsh_naive(con.function))
        c.check(cl.verdict == "bent", cl.verdict)
        deg = algebraic_degree(con.function)
        c.check(deg == 5, f"degree {deg}")
        c.summary = f"conditions hold, {cl.verdict}, degree {deg}"
    c.finish()


def test_criterion_6_theorem1_survey():
    with Criterion(6, limit=300) as c:
        r = run_survey("theorem1", fx.field_3_4(), workers=1)
        c.check(len(r.records) == 51_200, f"{len(r.records)} tuples")
        c.check(r.mismatches == 0, f"{r.mismatches} mismatches")
        cells = r.cells()
        c.check(sum(cells.values()) == 51_200, f"{len(cells)} (triple, verdict) cells reported")
        c.check(r.distribution_failed == 0, "k=2 table")
        c.summary = (f"{len(r.records)} tuples, {r.mismatches} mismatches, {len(cells)} cells; "
                     f"{r.distribution_checked} 2-plateaued spectra match the k=2 table")
    c.finish()


def test_criterion_7_theorem2_surveys():
    with Criterion(7) as c:
        runs = [
            ("F_81 exhaustive", run_survey("theorem2", fx.field_3_4(), workers=2)),
            ("F_243 sample", run_survey("theorem2", make_field(3, find_primitive_modulus(3, 5)),
                                        sample=1000, seed=7)),
            ("F_729 sample", run_survey("theorem2", fx.field_3_6(), sample=1000, seed=7)),
        ]
        parts = []
        for name, r in runs:
            c.check(r.mismatches == 0, f"{name}: {r.mismatches} mismatches")
            c.check(r.distribution_checked > 0 and r.distribution_failed == 0,
                    f"{name}: {r.distribution_failed} of {r.distribution_checked} distributions differ")
            parts.append(f"{name} {len(r.records)} tuples, {r.mismatches} mismatches, "
                         f"{r.distribution_checked} distributions match")
        c.summary = "; ".join(parts)
    c.finish()


def test_criterion_8_binomial_permutations():
    with Criterion(8) as c:
        total = 0
        for p, n in ((3, 2), (3, 4), (5, 2)):
            F = make_field(p, find_primitive_modulus(p, n))
            x = F.elements()
            for r in range(1, n):
                for a in range(1, F.order):
                    A = F.element(a)
                    L = binomial(A, r)
                    bijective = np.unique(L.table()).size == F.order
                    if not c.check(bijective == is_permutation_binomial(A, r), f"criterion {p},{n},{r},{a}"):
                        continue
                    if not bijective:
                        continue
                    M = inverse_binomial(A, r)
                    c.check(np.array_equal(M.evaluate(L.table()), x)
                            and np.array_equal(L.evaluate(M.table()), x), f"inverse {p},{n},{r},{a}")
                    if 2 * r == n:
                        c.check(inverse_binomial_half(A).coeffs == M.coeffs, f"shortcut {p},{n},{a}")
                    total += 1
        c.summary = f"{total} permutation binomials over F_9, F_81, F_25"
    c.finish()


def _rng(seed):
    return np.random.Generator(np.random.Philox(seed))


def test_criterion_9_identities():
    with Criterion(9) as c:
        rng = _rng(90)
        F81 = fx.field_3_4()
        dom = PairDomain(make_field(3, [2, 2, 1]))
        F25 = make_field(5, find_primitive_modulus(5, 2))
        for i in range(20):
            g = random_function(F81, rng)
            u, v = (int(t) for t in rng.integers(1, 81, 2))
            c.check(np.array_equal(C.lemma4_rhs_table(walsh_naive(g), u, v),
                                   walsh_naive(C.augment_product(g, u, v)).values), f"product {i}")
            h = random_function(dom, rng)
            u, v = (int(t) for t in rng.integers(1, dom.size, 2))
            c.check(np.array_equal(C.lemma5_rhs_table(walsh_naive(h), u, v),
                                   walsh_naive(C.augment_product_pair(h, u, v)).values), f"pair {i}")
            for F in (F81, F25):
                k = random_function(F, rng)
                w = int(rng.integers(1, F.order))
                c.check(np.array_equal(C.lemma6_rhs_table(walsh_naive(k), w),
                                       walsh_naive(C.augment_indicator(k, w)).values), f"indicator {i}")
        funcs = [_product_case(ex, case)[2] for ex in fx.PRODUCT_EXAMPLES for case in ex.cases]
        funcs += [_indicator_function(ex).function for ex in fx.INDICATOR_EXAMPLES]
        smalls = [F81, F25, make_field(7, find_primitive_modulus(7, 2)), dom]
        funcs += [random_function(smalls[i % 4], rng) for i in range(50)]
        # walsh_fast and walsh_naive verify Parseval and inversion before returning
        same = all(walsh_fast(f) == walsh_naive(f) for f in funcs)
        c.check(same, "fast = naive")
        c.summary = (f"product, pair and indicator identities on 20 random g each; fast = naive "
                     f"on {len(funcs)} functions; Parseval and inversion held on every spectrum")
    c.finish()


def test_criterion_10_closed_forms():
    with Criterion(10) as c:
        for F in (fx.field_3_4(), fx.field_3_6()):
            k = F.n // 2
            subs = np.flatnonzero(F.in_subfield(F.elements(), k))[1:]
            for lam in subs[:: max(1, len(subs) // 4)]:
                c.check(np.array_equal(walsh_naive(C.kasami(F, lam)).values,
                                       C.kasami_walsh_table(F, lam)), f"Kasami {F.order}")
            for lam in (1, 2, F.gen_power(1).index):
                c.check(np.array_equal(walsh_naive(C.sidelnikov(F, lam)).values,
                                       C.sidelnikov_walsh_table(F, lam)), f"Sidelnikov {F.order}")
        worst = 0.0
        for F in (fx.field_5_3(), make_field(7, find_primitive_modulus(7, 2))):
            for lam in range(1, F.order, max(1, F.order // 6)):
                got = walsh_naive(C.sidelnikov(F, lam)).to_complex()
                want = np.array([C.sidelnikov_walsh_complex(F, lam, a) for a in range(F.order)])
                worst = max(worst, float(np.max(np.abs(got - want) / np.abs(want))))
        c.check(worst <= 1e-6, f"relative error {worst:.1e}")
        c.summary = f"exact for p=3 over F_81, F_729; relative error {worst:.1e} over F_125, F_49"
    c.finish()


def test_criterion_11_trace_square_candidates_soft():
    # reported but non-fatal: the generator xi is not pinned down
    with Criterion("11 (soft)") as c:
        f1, f2 = trace_square_candidates()
        v = [classify(walsh_fast(f)).verdict for f in (f1, f2)]
        c.check(v == ["bent", "bent"], f"f1 {v[0]}, f2 {v[1]}")
        c.summary = f"f1 {v[0]}, f2 {v[1]} over {f1.domain.spec()}"
    if c.failures:
        pytest.xfail("soft check: " + "; ".join(c.failures))
