"""Golden-fixture runner: worked examples, distribution tables and identities.

Each check returns a :class:`CheckResult`; ``hard=False`` marks checks that
are reported but never fail the run.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import constructions as C
from . import fixtures as fx
from .cyclotomic import parse_cyclotomic
from .galois import make_field, find_primitive_modulus
from .linpoly import (
    LinearizedPoly,
    binomial,
    inverse_binomial,
    inverse_binomial_half,
    is_permutation_binomial,
    is_permutation_general,
)
from .pfun import (
    PAryFunction,
    PairDomain,
    algebraic_degree,
    classify,
    random_function,
    walsh_fast,
    walsh_naive,
)

SUITES = ("examples", "distributions", "identities", "all")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    hard: bool = True
    seconds: float = 0.0

    @property
    def status(self) -> str:
        word = "PASS" if self.passed else "FAIL"
        return word if self.hard else f"SOFT-{word}"

    def line(self) -> str:
        return f"{self.status}\t{self.name}\t{self.seconds:.2f}s\t{self.detail}"


def _timed(name, fn, hard=True) -> CheckResult:
    t = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing check is a failing check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, bool(ok), detail, hard, time.perf_counter() - t)


def _dist_from_text(p, d):
    return {parse_cyclotomic(p, k): v for k, v in d.items()}


# -- examples ----------------------------------------------------------------------

def _product_case(example, case):
    F = example.field()
    g = F.gen_power
    if example.family == "theorem3":
        pi = fx.mm_pi(F)
        dom = PairDomain(F)
        u = dom.index(g(case.u[0]), g(case.u[1]))
        v = dom.index(g(case.v[0]), g(case.v[1]))
        triple, pred = C.theorem3_predict(pi, u, v)
        f = C.theorem3_function(pi, u, v)
        spec = walsh_fast(f)
    else:
        lam = g(example.lam)
        predict = C.theorem1_predict if example.family == "theorem1" else C.theorem2_predict
        build = C.theorem1_function if example.family == "theorem1" else C.theorem2_function
        triple, pred = predict(F, lam, g(case.u), g(case.v))
        f = build(F, lam, g(case.u), g(case.v))
        spec = walsh_naive(f)
    c = classify(spec)
    ok = triple.astuple() == case.triple and pred.verdict == case.verdict == c.verdict
    detail = f"triple {triple} predicted {pred.verdict} observed {c.verdict}"
    if example.family == "theorem3" and case.label == "mm-1":
        inv_ok = inverse_binomial(g(1), 2).coeffs == fx.mm_pi_inverse_closed_form(F).coeffs
        ok = ok and inv_ok
        detail += f"; inverse of pi matches the closed form: {inv_ok}"
    return ok, detail


def _indicator_case(example):
    F = example.field()
    g = F.gen_power
    if example.family == "theorem4":
        con = C.theorem4(F, g(example.lam), g(example.u))
    else:
        con = C.theorem5(F, g(example.lam), g(example.u))
    spec = walsh_naive(con.function)
    c = classify(spec)
    deg = algebraic_degree(con.function)
    ok = con.report.holds and c.verdict == "bent" and c.regularity in ("regular", "weakly-regular")
    ok = ok and deg == example.degree
    detail = f"{con.report}; {c.verdict}, {c.regularity}, degree {deg}"
    if example.family == "theorem4":
        same = bool(np.array_equal(spec.values, con.oracle_table()))
        ok = ok and same
        detail += f"; closed form matches at all {F.order} points: {same}"
    return ok, detail


def example_checks():
    out = []
    for ex in fx.PRODUCT_EXAMPLES:
        for case in ex.cases:
            out.append(_timed(f"example {case.label}", lambda ex=ex, case=case: _product_case(ex, case)))
    for ex in fx.INDICATOR_EXAMPLES:
        out.append(_timed(f"example {ex.name}", lambda ex=ex: _indicator_case(ex)))
    return out


# -- distributions -------------------------------------------------------------------

def _observed(example, case):
    F = example.field()
    g = F.gen_power
    build = C.theorem1_function if example.family == "theorem1" else C.theorem2_function
    return walsh_naive(build(F, g(example.lam), g(case.u), g(case.v))).distribution()


def _dist_kasami():
    ex = fx.KASAMI_PRODUCT
    table = C.theorem1_distribution(3)
    obs = _observed(ex, ex.cases[2])
    expected = _dist_from_text(3, ex.distribution)
    ok = table.matches(obs) and table.as_counter() == expected
    return ok, f"predicted {table}; observed matches: {table.matches(obs)}"


def _dist_sidelnikov():
    ex = fx.SIDELNIKOV_PRODUCT
    F = ex.field()
    eta = int(F.eta(F.gen_power(ex.lam).index))
    table = C.theorem2_distribution(4, eta)
    obs = _observed(ex, ex.cases[2])
    expected = _dist_from_text(3, ex.distribution)
    ok = table.matches(obs) and table.as_counter() == expected
    return ok, f"eta(lambda) = {eta}; predicted {table}; observed matches: {table.matches(obs)}"


def distribution_checks():
    return [
        _timed("kasami product 2-plateaued table (k=3)", _dist_kasami),
        _timed("sidelnikov product 2-plateaued table (n=4)", _dist_sidelnikov),
    ]


# -- identities ----------------------------------------------------------------------

def _rng(seed):
    return np.random.Generator(np.random.Philox(seed))


def _product_identity(count=20):
    F = fx.field_3_4()
    rng = _rng(4)
    for _ in range(count):
        g = random_function(F, rng)
        u, v = (int(t) for t in rng.integers(1, F.order, 2))
        lhs = walsh_naive(C.augment_product(g, u, v)).values
        if not np.array_equal(lhs, C.lemma4_rhs_table(walsh_naive(g), u, v)):
            return False, f"mismatch for u={u}, v={v}"
    return True, f"{count} random g over F_81"


def _pair_product_identity(count=20):
    dom = PairDomain(make_field(3, find_primitive_modulus(3, 2)))
    rng = _rng(5)
    for _ in range(count):
        g = random_function(dom, rng)
        u, v = (int(t) for t in rng.integers(1, dom.size, 2))
        lhs = walsh_naive(C.augment_product_pair(g, u, v)).values
        if not np.array_equal(lhs, C.lemma5_rhs_table(walsh_naive(g), u, v)):
            return False, f"mismatch for u={u}, v={v}"
    return True, f"{count} random g over F_9 x F_9"


def _indicator_identity(count=20):
    fields = [make_field(5, find_primitive_modulus(5, 2)), fx.field_3_4()]
    rng = _rng(6)
    for F in fields:
        for _ in range(count):
            g = random_function(F, rng)
            u = int(rng.integers(1, F.order))
            lhs = walsh_naive(C.augment_indicator(g, u)).values
            if not np.array_equal(lhs, C.lemma6_rhs_table(walsh_naive(g), u)):
                return False, f"mismatch over {F.spec()} for u={u}"
    return True, f"{count} random g each over F_25 and F_81"


def _fixture_functions():
    F6, F4 = fx.field_3_6(), fx.field_3_4()
    out = []
    for ex in (fx.KASAMI_PRODUCT, fx.SIDELNIKOV_PRODUCT):
        F = ex.field()
        g = F.gen_power
        build = C.theorem1_function if ex.family == "theorem1" else C.theorem2_function
        out += [build(F, g(ex.lam), g(c.u), g(c.v)) for c in ex.cases]
    pi = fx.mm_pi(F4)
    dom = PairDomain(F4)
    g = F4.gen_power
    for c in fx.MM_PRODUCT.cases:
        u = dom.index(g(c.u[0]), g(c.u[1]))
        v = dom.index(g(c.v[0]), g(c.v[1]))
        out.append(C.theorem3_function(pi, u, v))
    out.append(C.kasami(F6, F6.gen_power(84)))
    out.append(C.sidelnikov(F4, F4.gen_power(1)))
    for ex in fx.INDICATOR_EXAMPLES:
        F = ex.field()
        build = C.theorem4 if ex.family == "theorem4" else C.theorem5
        out.append(build(F, F.gen_power(ex.lam), F.gen_power(ex.u)).function)
    return out


def _fast_equals_naive(random_count=50):
    funcs = _fixture_functions()
    rng = _rng(9)
    smalls = [fx.field_3_4(), make_field(5, find_primitive_modulus(5, 2)),
              make_field(7, find_primitive_modulus(7, 2)), PairDomain(make_field(3, [2, 2, 1]))]
    funcs += [random_function(smalls[i % len(smalls)], rng) for i in range(random_count)]
    for f in funcs:
        # both paths verify Parseval and inversion internally
        if walsh_fast(f) != walsh_naive(f):
            return False, f"paths differ on {f!r}"
    return True, f"{len(funcs)} functions; Parseval and inversion held on every spectrum"


def _binomial_inverses():
    total = 0
    for p, n in ((3, 2), (3, 4), (5, 2)):
        F = make_field(p, find_primitive_modulus(p, n))
        ident = LinearizedPoly.identity(F).coeffs
        for r in range(1, n):
            for a in range(1, F.order):
                a_el = F.element(a)
                L = binomial(a_el, r)
                perm = np.unique(L.table()).size == F.order
                if perm != is_permutation_binomial(a_el, r) or perm != is_permutation_general(L):
                    return False, f"criterion wrong for p={p}, n={n}, r={r}, a={a}"
                if not perm:
                    continue
                M = inverse_binomial(a_el, r)
                if L.compose(M).coeffs != ident or M.compose(L).coeffs != ident:
                    return False, f"inverse wrong for p={p}, n={n}, r={r}, a={a}"
                if 2 * r == n and inverse_binomial_half(a_el).coeffs != M.coeffs:
                    return False, f"half-twist form differs for p={p}, n={n}, a={a}"
                total += 1
    return True, f"{total} permutation binomials over F_9, F_81, F_25"


def _closed_forms():
    for F in (fx.field_3_4(), fx.field_3_6()):
        if F.n % 2 == 0:
            for lam in np.flatnonzero(F.in_subfield(F.elements(), F.n // 2))[1:4]:
                if not np.array_equal(walsh_naive(C.kasami(F, lam)).values,
                                      C.kasami_walsh_table(F, lam)):
                    return False, f"Kasami closed form fails over {F.spec()}"
        for lam in (1, F.gen_power(1).index):
            if not np.array_equal(walsh_naive(C.sidelnikov(F, lam)).values,
                                  C.sidelnikov_walsh_table(F, lam)):
                return False, f"Sidelnikov closed form fails over {F.spec()}"
    worst = 0.0
    for F in (fx.field_5_3(), make_field(7, find_primitive_modulus(7, 2))):
        for lam in (1, F.gen_power(1).index):
            got = walsh_naive(C.sidelnikov(F, lam)).to_complex()
            want = np.array([C.sidelnikov_walsh_complex(F, lam, a) for a in range(F.order)])
            worst = max(worst, float(np.max(np.abs(got - want) / np.abs(want))))
    return worst <= 1e-6, f"exact for p=3; max relative error {worst:.1e} for F_125 and F_49"


def identity_checks():
    return [
        _timed("product identity on F_81", _product_identity),
        _timed("product identity on F_9 x F_9", _pair_product_identity),
        _timed("indicator identity on F_25 and F_81", _indicator_identity),
        _timed("fast transform equals naive", _fast_equals_naive),
        _timed("binomial permutation criterion and inverse", _binomial_inverses),
        _timed("Kasami and Sidelnikov closed forms", _closed_forms),
    ]


# -- soft checks -----------------------------------------------------------------------

def trace_square_candidates(F=None):
    """f1 = Tr(xi^6 x^2) + 2 Tr(x)^2 and f2 = Tr(xi x^26) + 2 Tr(x)^2 on F_(5^4), xi = g."""
    F = fx.field_5_4() if F is None else F
    x = F.elements()
    xi = F.gen_power(1).index
    t = F.tr(x)
    extra = 2 * t * t
    f1 = PAryFunction(F, F.tr(F.mul(F.power(xi, 6), F.mul(x, x))) + extra, name="f1")
    f2 = PAryFunction(F, F.tr(F.mul(xi, F.power(x, 26))) + extra, name="f2")
    return f1, f2


def soft_checks():
    def run():
        f1, f2 = trace_square_candidates()
        v = [classify(walsh_fast(f)).verdict for f in (f1, f2)]
        return all(x == "bent" for x in v), f"f1 {v[0]}, f2 {v[1]} over {f1.domain.spec()}"

    return [_timed("trace-square candidates f1, f2 over F_625", run, hard=False)]


def run_suite(suite: str = "all"):
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    out = []
    if suite in ("examples", "all"):
        out += example_checks()
    if suite in ("distributions", "all"):
        out += distribution_checks()
    if suite in ("identities", "all"):
        out += identity_checks()
    if suite == "all":
        out += soft_checks()
    return out
