import itertools

import pytest
from hypothesis import given, strategies as st

from nivenpoly import ArityError, Monomial, madd, mdeg, mnmc_le, mweight, mzero
from nivenpoly.monomial import monomials_up_to_degree

from conftest import monomials


def M(*e):
    return Monomial(e)


def test_madd_examples():
    assert madd(M(2, 1, 0), M(0, 1, 1)) == M(2, 2, 1)
    assert madd(M(1, 0), M(0, 1)) == M(1, 1)
    assert madd(M(3, 1, 4), mzero(3)) == M(3, 1, 4)


def test_madd_arity_mismatch():
    with pytest.raises(ArityError):
        madd(M(1, 0), M(1, 0, 0))
    with pytest.raises(ArityError):
        mnmc_le(M(1), M(1, 0))


def test_degree_and_weight():
    assert mdeg(M(2, 1, 1)) == 4
    assert mdeg(mzero(3)) == 0
    assert mdeg(M(3, 1, 0)) == 4
    assert mweight(M(2, 1, 1)) == 7
    assert mweight(mzero(3)) == 0
    assert mweight(M(0, 0, 2)) == 6


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        M(1, -1)


def test_order_examples():
    assert M(0, 1, 0) < M(1, 0, 0)
    assert M(1, 0, 0) < M(0, 0, 2)
    m = M(2, 0, 1)
    assert mnmc_le(m, m) and not m < m


def test_rendering():
    assert str(M(2, 1, 0)) == "x1^2*x2"
    assert str(mzero(3)) == "1"
    assert str(M(0, 0, 1)) == "x3"


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(monomials(n), monomials(n), monomials(n))))
def test_commutative_monoid(abc):
    a, b, c = abc
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + mzero(a.arity) == a


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(monomials(n), monomials(n))))
def test_degree_and_weight_are_morphisms(ab):
    a, b = ab
    assert mdeg(a + b) == mdeg(a) + mdeg(b)
    assert mweight(a + b) == mweight(a) + mweight(b)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(monomials(n), monomials(n), monomials(n))))
def test_total_order_and_translation_invariance(abc):
    a, b, c = abc
    assert mnmc_le(a, b) or mnmc_le(b, a)
    if mnmc_le(a, b) and mnmc_le(b, a):
        assert a == b
    if mnmc_le(a, b) and mnmc_le(b, c):
        assert mnmc_le(a, c)
    if a < b:
        assert a + c < b + c


@pytest.mark.parametrize("arity", [1, 2, 3])
def test_strictly_smaller_set_is_finite(arity):
    # everything below m0 has degree <= deg m0, so it sits in a finite box
    for m0 in monomials_up_to_degree(arity, 5):
        below = [m for m in monomials_up_to_degree(arity, m0.degree) if m < m0]
        brute = [
            Monomial(e)
            for e in itertools.product(range(m0.degree + 1), repeat=arity)
            if sum(e) <= m0.degree and Monomial(e) < m0
        ]
        assert sorted(below) == sorted(brute)
        assert all(m.degree <= m0.degree for m in below)


def test_monomials_up_to_degree_count():
    from math import comb

    for n in range(0, 4):
        for d in range(0, 5):
            assert len(list(monomials_up_to_degree(n, d))) == comb(d + n, n)
