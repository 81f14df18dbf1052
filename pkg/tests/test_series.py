from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import series_st
from formal_quintic.errors import (CompositionRequiresZeroConstant, DivisionByNonUnit,
                                   NotReversible)
from formal_quintic.ring.series import QSeries, binomial_series

q = QSeries.gen


def S(*cs, N=None):
    return QSeries([Fraction(c) for c in cs], N)


def test_difference_of_squares():
    assert (1 + q(2)) * (1 - q(2)) == S(1, 0, -1)


def test_geometric_series():
    assert (1 - q(3)).inverse() == S(1, 1, 1, 1)


def test_long_division():
    # multiply back: (1 + 113400 q^2)(1 + 120 q) = 1 + 120 q + 113400 q^2 + O(q^3)
    a = S(1, 120, 113400)
    b = S(1, 120, 0)
    assert a / b == S(1, 0, 113400)
    assert (a / b) * b == a


def test_division_by_non_unit():
    with pytest.raises(DivisionByNonUnit):
        S(1, 2) / q(1)


def test_precision_is_min_of_operands():
    assert (S(1, 2, 3) + S(1, 1)).precision == 1


def test_compose_monomial():
    assert (1 + q(4)).compose(q(4) ** 2) == S(1, 0, 1, 0, 0)


def test_compose_geometric_hand_expansion():
    outer = (1 - q(2)).inverse()
    assert outer.compose(q(2) + q(2) ** 2) == S(1, 1, 2)


def test_compose_rejects_constant_inner():
    with pytest.raises(CompositionRequiresZeroConstant):
        q(3).compose(1 + q(3))


def test_reverse_catalan():
    # q + q^2 has inverse (sqrt(1+4Q)-1)/2 = Q - Q^2 + 2Q^3 - 5Q^4
    assert (q(3) + q(3) ** 2).reverse() == S(0, 1, -1, 2)
    assert q(5).reverse() == q(5)


def test_reverse_requires_unit_linear_term():
    with pytest.raises(NotReversible):
        (q(3) ** 2).reverse()


def test_exp_log():
    assert QSeries.zero(4).exp() == QSeries.one(4)
    assert (1 + q(3)).log() == S(0, 1, Fraction(-1, 2), Fraction(1, 3))
    a = S(1, 1, 1)
    assert a.log().exp() == a


def test_dop():
    assert QSeries.constant(7, 4).dop() == QSeries.zero(4)
    assert (q(5) ** 3).dop() == (q(5) ** 3) * 3


def test_dop_of_L_term_by_term():
    # (1-3125q)^(-1/5): coefficient c_n, D gives n c_n
    L = binomial_series(Fraction(-1, 5), Fraction(-3125), 8)
    assert L.dop() == (L ** 6 - L) / 5
    assert [L.dop()[n] for n in range(9)] == [n * L[n] for n in range(9)]


@given(series_st(), series_st(), series_st())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == QSeries.zero(a.precision)


@given(series_st(unit=True))
def test_inverse(a):
    assert a * a.inverse() == QSeries.one(a.precision)


@given(series_st(), series_st())
def test_dop_is_derivation(a, b):
    assert (a * b).dop() == a.dop() * b + a * b.dop()


@settings(max_examples=50)
@given(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5),
                min_size=5, max_size=5))
def test_reverse_round_trip(cs):
    a = QSeries([0, 1] + cs, 6)
    r = a.reverse()
    assert a.compose(r) == q(6)
    assert r.compose(a) == q(6)


@given(series_st(zero_constant=True))
def test_exp_log_round_trip(a):
    assert a.exp().log() == a
