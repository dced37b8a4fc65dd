import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pbent.cyclotomic import (
    CyclotomicInt,
    NonRational,
    canonical,
    extend,
    format_cyclotomic,
    from_array,
    mul_array,
    mul_root_array,
    norm_sq,
    parse_cyclotomic,
    to_complex_array,
)
from pbent.errors import MixedRootOrder, ParseError

PRIMES = [3, 5, 7, 11]


def as_complex(p, coeffs):
    return sum(c * cmath.exp(2j * math.pi * k / p) for k, c in enumerate(coeffs))


def cyc(p):
    return st.lists(st.integers(-50, 50), min_size=p - 1, max_size=p - 1).map(
        lambda c: CyclotomicInt(p, c)
    )


pairs = st.sampled_from(PRIMES).flatmap(lambda p: st.tuples(cyc(p), cyc(p)))


@given(pairs)
def test_ring_operations_match_complex(ab):
    a, b = ab
    za, zb = a.to_complex(), b.to_complex()
    assert abs((a + b).to_complex() - (za + zb)) < 1e-8
    assert abs((a - b).to_complex() - (za - zb)) < 1e-8
    assert abs((a * b).to_complex() - za * zb) < 1e-6


@given(pairs)
def test_canonical_form_is_unique(ab):
    # the equality test is coordinatewise, so it must agree with numeric equality
    a, b = ab
    assert (a == b) == (abs(a.to_complex() - b.to_complex()) < 1e-9)


@given(st.sampled_from(PRIMES).flatmap(cyc))
def test_conjugate_and_norm(a):
    z = a.to_complex()
    assert abs(a.conjugate().to_complex() - z.conjugate()) < 1e-8
    m = a.magnitude_squared()
    if isinstance(m, int):
        assert abs(m - abs(z) ** 2) < 1e-6
    else:
        assert abs(m.value.to_complex() - abs(z) ** 2) < 1e-6


@given(st.sampled_from(PRIMES).flatmap(cyc), st.integers(-20, 20))
def test_mul_root_is_multiplication(a, j):
    p = a.p
    assert a.mul_root(j) == a * CyclotomicInt.root(p, j)


def test_reduction_of_top_exponent():
    # 1 + w + ... + w^(p-1) = 0
    for p in PRIMES:
        assert CyclotomicInt(p, [1] * p) == CyclotomicInt.zero(p)
        assert CyclotomicInt.root(p, p - 1) == CyclotomicInt(p, [-1] * (p - 1))


@pytest.mark.parametrize("p", PRIMES)
def test_gauss_sum_square(p):
    G = CyclotomicInt.gauss_sum(p)
    sign = 1 if p % 4 == 1 else -1
    assert G * G == sign * p
    want = math.sqrt(p) if p % 4 == 1 else 1j * math.sqrt(p)
    assert abs(G.to_complex() - want) < 1e-9


def test_p3_norms_are_integers():
    for c in np.ndindex(5, 5):
        a = CyclotomicInt(3, [c[0] - 2, c[1] - 2])
        assert isinstance(a.magnitude_squared(), int)


def test_irrational_norm_for_p5():
    m = CyclotomicInt(5, [1, 1]).magnitude_squared()
    assert isinstance(m, NonRational)
    # |1 + w|^2 = 2 + 2 cos(2 pi / 5)
    assert abs(m.value.to_complex() - (2 + 2 * math.cos(2 * math.pi / 5))) < 1e-12


def test_as_root_multiple():
    assert CyclotomicInt.root(3, 1, -81).as_root_multiple() == (-81, 1)
    assert CyclotomicInt(3, [81, 81]).as_root_multiple() == (-81, 2)
    assert CyclotomicInt(5, [1, 1]).as_root_multiple() is None


def test_mixed_orders_rejected():
    with pytest.raises(MixedRootOrder):
        CyclotomicInt(3, [1, 1]) + CyclotomicInt(5, [1])


def test_exact_div():
    assert CyclotomicInt(3, [6, -9]).exact_div(3) == CyclotomicInt(3, [2, -3])
    with pytest.raises(ArithmeticError):
        CyclotomicInt(3, [6, 1]).exact_div(3)


@pytest.mark.parametrize(
    "p,coeffs,text",
    [
        (3, [0, 0], "0"),
        (3, [-81, 0], "-81"),
        (3, [0, -81], "-81*w"),
        (3, [81, 81], "81 + 81*w"),
        (3, [-27, -27], "-27 - 27*w"),
        (5, [0, 1, 0, -3], "w - 3*w^3"),
        (7, [2, 0, 1, 0, 0, 0], "2 + w^2"),
    ],
)
def test_text_format(p, coeffs, text):
    assert format_cyclotomic(p, coeffs) == text
    assert parse_cyclotomic(p, text) == CyclotomicInt(p, coeffs)


@given(st.sampled_from(PRIMES).flatmap(cyc))
def test_text_roundtrip(a):
    assert parse_cyclotomic(a.p, str(a)) == a


def test_parse_top_exponent_and_errors():
    assert parse_cyclotomic(3, "w^2") == CyclotomicInt(3, [-1, -1])
    for bad in ("", "w^3", "1 +", "x"):
        with pytest.raises(ParseError):
            parse_cyclotomic(3, bad)


# -- array kernels --------------------------------------------------------------------

@pytest.mark.parametrize("p", PRIMES)
def test_array_kernels_match_scalar(p):
    rng = np.random.default_rng(p)
    a = rng.integers(-30, 30, size=(40, p - 1))
    b = rng.integers(-30, 30, size=(40, p - 1))
    j = rng.integers(0, p, size=40)
    prod = mul_array(a, b)
    shifted = mul_root_array(a, j)
    vals, rational = norm_sq(a)
    cplx = to_complex_array(a)
    for r in range(40):
        A, B = from_array(p, a[r]), from_array(p, b[r])
        assert from_array(p, prod[r]) == A * B
        assert from_array(p, shifted[r]) == A.mul_root(int(j[r]))
        m = A.magnitude_squared()
        assert rational[r] == isinstance(m, int)
        if rational[r]:
            assert vals[r] == m
        assert abs(cplx[r] - as_complex(p, a[r])) < 1e-8
    assert np.array_equal(canonical(extend(a)), a)


def test_mul_root_scalar_shift():
    a = np.array([[1, 0], [0, 1]])
    assert np.array_equal(mul_root_array(a, 1), [[0, 1], [-1, -1]])
