from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sunroots import _intpoly
from sunroots.exact_core import (
    X,
    Polynomial,
    as_rational,
    poly_add,
    poly_derivative,
    poly_eval,
    poly_gcd,
    poly_mul,
    poly_pow,
    poly_shift,
    squarefree_part,
)

P1_SIGMA = X
P2_SIGMA = Polynomial([0, F(3, 2), F(1, 2)])
# hand expansion of the recursion with gbar = 1, 2, 4, 4
P4_GBAR = Polynomial([0, 1, F(11, 6), F(1, 2), F(1, 24)])

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small_rationals, max_size=7).map(Polynomial)
int_polys = st.lists(st.integers(-(10**30), 10**30), min_size=1, max_size=60)


def test_rational_normalization():
    r = as_rational("-6/4")
    assert (r.numerator, r.denominator) == (-3, 2)
    z = as_rational("0/7")
    assert (z.numerator, z.denominator) == (0, 1)
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_add_examples():
    assert poly_add(X, -X).is_zero()
    assert P2_SIGMA + P2_SIGMA == Polynomial([0, 3, 1])
    assert poly_add(P1_SIGMA, P2_SIGMA) == Polynomial([0, F(5, 2), F(1, 2)])


def test_mul_examples():
    assert poly_mul(X + 1, X - 1) == Polynomial([-1, 0, 1])
    assert poly_mul(X, (X + 3) / 2) == P2_SIGMA
    assert poly_mul(Polynomial(), P2_SIGMA).is_zero()


def test_pow_examples():
    assert poly_pow(X, 3) == Polynomial([0, 0, 0, 1])
    assert poly_pow(P2_SIGMA, 0) == Polynomial([1])
    delta1 = poly_pow(P1_SIGMA, 2) - P2_SIGMA
    assert delta1 == Polynomial([0, F(-3, 2), F(1, 2)])


def test_eval_examples():
    assert poly_eval(P2_SIGMA, 1) == 2
    assert poly_eval(P2_SIGMA, 0) == P2_SIGMA[0]
    assert poly_eval(P4_GBAR, -1) == F(3, 8)


def test_derivative_gcd_squarefree():
    assert squarefree_part(X**2) == X
    p = (X - 1) ** 2 * (X + 2)
    assert squarefree_part(p) == (X - 1) * (X + 2)
    assert poly_gcd(X**2 - 1, X - 1) == X - 1
    assert poly_derivative(X**3 + X) == 3 * X**2 + 1
    with pytest.raises(ValueError):
        poly_gcd(Polynomial(), Polynomial())


def test_shift_examples():
    assert poly_shift(X**2, 1) == X**2 + 2 * X + 1
    delta1 = Polynomial([0, F(-3, 2), F(1, 2)])
    shifted = poly_shift(delta1, 3)
    assert shifted == P2_SIGMA
    assert shifted[0] == 0
    assert poly_shift(P4_GBAR, 0) == P4_GBAR


def test_degree_and_zero():
    assert Polynomial().degree == -1
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial([1, 2, 0, 0]).degree == 1


def test_divmod_roundtrip():
    a = (X**5 - 3 * X + F(1, 3))
    b = 2 * X**2 + 1
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(polys, small_rationals, small_rationals)
def test_shift_matches_evaluation(a, x, c):
    assert poly_eval(poly_shift(a, c), x) == poly_eval(a, x + c)


@given(polys, st.integers(0, 5), st.integers(0, 5))
def test_pow_additive(a, m, n):
    assert poly_pow(a, m + n) == poly_mul(poly_pow(a, m), poly_pow(a, n))


@given(polys, polys)
def test_results_are_normalized(a, b):
    for p in (a + b, a - b, a * b, a.shift(F(1, 3)), a.derivative()):
        assert not p.coefficients or p.coefficients[-1] != 0
        for c in p.coefficients:
            assert c.denominator > 0


@settings(max_examples=40)
@given(int_polys, int_polys)
def test_kronecker_matches_schoolbook(a, b):
    expected = _intpoly.strip(_intpoly._schoolbook(a, b))
    # force the Kronecker path regardless of size
    k = _intpoly.max_bits(a) + _intpoly.max_bits(b) + min(len(a), len(b)).bit_length() + 1
    out = []
    _intpoly._unpack(_intpoly._pack(a, k) * _intpoly._pack(b, k), k, len(a) + len(b) - 1, out)
    assert _intpoly.strip(out) == expected
    assert _intpoly.mul(a, b) == expected


@settings(max_examples=30)
@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=150), st.integers(-7, 7))
def test_taylor_shift_divide_and_conquer(c, t):
    assert _intpoly.strip(_intpoly.taylor_shift(c, t)) == _intpoly.strip(_intpoly._shift_small(c, t))


@settings(max_examples=40)
@given(
    st.lists(st.integers(-50, 50), min_size=2, max_size=9),
    st.fractions(min_value=-5, max_value=5, max_denominator=8),
    st.fractions(min_value=F(1, 8), max_value=4, max_denominator=8),
)
def test_interval_transform_is_positive_multiple(c, lo, w):
    hi = lo + w
    t = _intpoly.interval_transform(c, lo, hi)
    d = len(c) - 1
    p = Polynomial(c)
    # direct oracle: (1+x)^d p(lo + (hi-lo)/(1+x)) at a few sample points
    ratios = set()
    for xv in (F(1, 3), F(2), F(7, 5)):
        direct = (1 + xv) ** d * p(lo + (hi - lo) / (1 + xv))
        val = Polynomial(t)(xv)
        if direct == 0:
            assert val == 0
        else:
            ratios.add(val / direct)
    assert len(ratios) <= 1
    assert all(r > 0 for r in ratios)


def test_sign_variations():
    assert _intpoly.sign_variations([1, 0, -2, 3, 0, 0, 5]) == 2
    assert _intpoly.sign_variations([]) == 0
