from fractions import Fraction

import pytest

from formal_quintic.asymptotics import (asymptotic_expansion, degree_bound_check, explicit_r,
                                        laurent_recognize, lemma_rr_check, mu_extract,
                                        r2_recognition_check, r_extract, recognized_r0,
                                        rjk_extract, rpoly_structure_check, symbolic_rows,
                                        zagier_zinger_check)
from formal_quintic.checks import NotRepresentable
from formal_quintic.errors import InsufficientPrecision
from formal_quintic.hae.poly import eval_gen
from formal_quintic.quintic import build_hypergeometric, build_L, substitute_qL
from formal_quintic.ring.laurent import LaurentL


def test_mu_first_coefficients():
    # D mu = L - 1 with L = 1 + 625 q + 1171875 q^2
    mu = mu_extract(4)
    assert mu[0] == 0 and mu[1] == 625 and mu[2] == Fraction(1171875, 2)
    assert mu.dop() == build_L(4) - 1


def test_r_series_closed_forms():
    r = r_extract(12, 2)
    for k in range(3):
        assert r[k] == substitute_qL(explicit_r(k), 12)


def test_recognition_recovers_known_polynomial():
    p = LaurentL({-1: 3, 0: Fraction(1, 7), 4: -2})
    assert laurent_recognize(substitute_qL(p, 15), -2, 5) == p


def test_recognition_rejects_non_laurent_series():
    i0, _ = build_hypergeometric(15)
    res = laurent_recognize(i0, -2, 5)
    assert isinstance(res, NotRepresentable) and not res


def test_recognition_needs_surplus_orders():
    with pytest.raises(InsufficientPrecision):
        laurent_recognize(build_L(10), -2, 5)


def test_lemma_rr_small():
    assert lemma_rr_check(10, 2).details["wrap_around"]


def test_wrap_around_regenerates_row_zero():
    rows = symbolic_rows(recognized_r0(18, 2))
    assert rows[5] == rows[0]


def test_symbolic_rows_match_extraction():
    rows = symbolic_rows(recognized_r0(18, 2))
    for j in range(5):
        for k in range(3):
            assert rjk_extract(j, 18, 2)[k] == eval_gen(rows[j][k], 18)


def test_rpoly_structure_small():
    d = rpoly_structure_check(18, 2).details
    assert d["y_coefficient"] == [1, 2]
    assert d["r2_in_A2_A4"] == [0, 1, 2]


@pytest.mark.parametrize("coordinates", ["A", "X"])
def test_degree_bounds_small(coordinates):
    d = degree_bound_check(18, 2, coordinates).details["degrees"]
    assert d["R00"] == [1, 1]


def test_r2_fit_low_order():
    assert set(r2_recognition_check(kmax=1).details["fits"]) == {"R20", "R21"}


def test_zagier_zinger_small():
    report = zagier_zinger_check(18, 2)
    assert report.details["R"]["0"] == explicit_r(0).to_json()


def test_expansion_container():
    ex = asymptotic_expansion(8, 1)
    assert ex.r(0, 0) == build_L(8)
