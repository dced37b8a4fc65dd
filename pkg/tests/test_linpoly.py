import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pbent import fixtures as fx
from pbent.errors import NotAPermutation, OutOfRange, ParseError, ZeroParameter
from pbent.linpoly import (
    LinearizedPoly,
    binomial,
    inverse_binomial,
    inverse_binomial_half,
    inverse_linearized,
    inverse_map,
    is_permutation_binomial,
    is_permutation_general,
    parse_linearized,
    rank_mod_p,
)


def is_bijective(L):
    t = L.table()
    return np.unique(t).size == t.size


@pytest.mark.parametrize("name", ["f9", "f81", "f25", "f27", "f49"])
def test_binomial_criterion_and_inverse_exhaustive(name, request):
    F = request.getfixturevalue(name)
    ident = LinearizedPoly.identity(F).coeffs
    x = F.elements()
    count = 0
    for r in range(1, F.n):
        for a in range(1, F.order):
            A = F.element(a)
            L = binomial(A, r)
            perm = is_permutation_binomial(A, r)
            assert perm == is_bijective(L) == is_permutation_general(L)
            if not perm:
                with pytest.raises(NotAPermutation):
                    inverse_binomial(A, r)
                continue
            count += 1
            inv = inverse_binomial(A, r)
            assert np.array_equal(inv.evaluate(L.table()), x)
            assert L.compose(inv).coeffs == ident == inv.compose(L).coeffs
            assert inv.coeffs == inverse_linearized(L).coeffs
    assert count > 0


def test_half_twist_shortcut(f81, f729):
    for F in (f81, f729):
        h = F.n // 2
        for a in range(1, F.order, 7):
            A = F.element(a)
            if is_permutation_binomial(A, h):
                assert inverse_binomial_half(A).coeffs == inverse_binomial(A, h).coeffs
            else:
                with pytest.raises(NotAPermutation):
                    inverse_binomial_half(A)
    with pytest.raises(OutOfRange):
        inverse_binomial_half(fx.field_5_3().one())


def test_example_binomial_inverse(f81):
    # y^9 + g y over F_81 and its closed-form inverse
    pi = fx.mm_pi(f81)
    g = f81.gen_power(1)
    assert is_permutation_binomial(g, 2)
    assert inverse_binomial(g, 2).coeffs == fx.mm_pi_inverse_closed_form(f81).coeffs
    assert inverse_binomial_half(g).coeffs == fx.mm_pi_inverse_closed_form(f81).coeffs
    assert pi.compose(fx.mm_pi_inverse_closed_form(f81)) == LinearizedPoly.identity(f81)


@settings(max_examples=40)
@given(st.lists(st.integers(0, 80), min_size=4, max_size=4))
def test_general_inverse(coeffs):
    F = fx.field_3_4()
    L = LinearizedPoly(F, tuple(coeffs))
    if not is_permutation_general(L):
        with pytest.raises(NotAPermutation):
            inverse_linearized(L)
        return
    inv = inverse_linearized(L)
    ident = LinearizedPoly.identity(F)
    assert L.compose(inv) == ident == inv.compose(L)
    assert np.array_equal(inv.table(), inverse_map(L.table()))


@settings(max_examples=40)
@given(st.lists(st.integers(0, 80), min_size=4, max_size=4),
       st.lists(st.integers(0, 80), min_size=4, max_size=4))
def test_composition_matches_maps(a, b):
    F = fx.field_3_4()
    A, B = LinearizedPoly(F, tuple(a)), LinearizedPoly(F, tuple(b))
    assert np.array_equal(A.compose(B).table(), A.table()[B.table()])


@given(st.lists(st.integers(0, 80), min_size=4, max_size=4))
def test_linearity(coeffs):
    F = fx.field_3_4()
    L = LinearizedPoly(F, tuple(coeffs))
    x, y = F.elements(), F.elements()[::-1]
    assert np.array_equal(L.evaluate(F.add(x, y)), F.add(L.evaluate(x), L.evaluate(y)))
    assert np.array_equal(L.evaluate(F.smul(2, x)), F.smul(2, L.evaluate(x)))


def test_text_roundtrip(f81):
    L = parse_linearized(f81, "1*x^p2 + g^1*x")
    assert L.coeffs == (f81.gen_power(1).index, 0, 1, 0)
    assert str(L) == "g^1*x + g^0*x^p2"
    assert parse_linearized(f81, str(L)) == L
    assert parse_linearized(f81, "[0,1,0,0]*x^p + 2*x^p4").coeffs == (2, f81.gen_power(1).index, 0, 0)
    assert str(LinearizedPoly(f81, (0, 0, 0, 0))) == "0"
    with pytest.raises(ParseError):
        parse_linearized(f81, "x^p2")


def test_binomial_validation(f81):
    with pytest.raises(ZeroParameter):
        binomial(f81.zero(), 1)
    with pytest.raises(OutOfRange):
        binomial(f81.one(), 4)
    with pytest.raises(OutOfRange):
        is_permutation_binomial(f81.one(), 0)


def test_permutation_count_matches_kernel_count(f81):
    # x^(p^r) + a x fails to permute iff -a is a (p^r - 1)-th power of a nonzero element
    for r in range(1, 4):
        d = math.gcd(4, r)
        powers = {int(f81.power(x, 3**r - 1)) for x in range(1, 81)}
        for a in range(1, 81):
            bad = int(f81.neg(a)) in powers
            assert is_permutation_binomial(f81.element(a), r) == (not bad)
        assert len(powers) == 80 // (3**d - 1)


def test_rank_mod_p():
    assert rank_mod_p(np.array([[1, 2], [2, 4]]), 3) == 1
    assert rank_mod_p(np.eye(3, dtype=np.int64), 5) == 3
