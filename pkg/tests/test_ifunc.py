from fractions import Fraction

import pytest
import sympy

from formal_quintic.errors import IdentityViolation
from formal_quintic.ifunc import (ZSeries, _lifted, c_relations_check, check_c0_matches_i0,
                                  i0_limit, picard_fuchs_check, sbar_build, sbar_cycle_check)
from formal_quintic.quintic import build_hypergeometric, build_series
from formal_quintic.ring.hclass import HClass


def test_i0_is_value_at_infinity():
    F = _lifted(4, "H")
    i0, _ = build_hypergeometric(4)
    assert F.infinity_constant() == i0
    assert [i0_limit(d) for d in range(5)] == list(i0.coeffs)


def test_degree_one_expansion_against_sympy():
    # H = 1: prod_i (1 - lambda_i + z) = (1+z)^5 - 1, a simple pole at z = 0
    z = sympy.symbols("z")
    expr = sympy.prod([5 + k * z for k in range(1, 6)]) / ((1 + z) ** 5 - 1)
    ref = sympy.series(expr, z, 0, 6).removeO()
    ex = _lifted(1, "Q").expand_zero([5, 5])[1]
    for e in range(-1, 6):
        c = ref.coeff(z, e)
        assert ex[e] == Fraction(int(c.p), int(c.q))


def test_m_applied_to_one_is_H():
    one = ZSeries("H", (), [(HClass.coerce(1),)])
    assert one.m_apply().numerators[0] == (HClass.H(),)


def test_picard_fuchs_small():
    report = picard_fuchs_check(4, 4)
    assert report.passed and report.details["exact"]


def test_picard_fuchs_wrong_constant_fails_at_degree_zero():
    with pytest.raises(IdentityViolation) as exc:
        picard_fuchs_check(2, 2, constant_term=0)
    assert exc.value.locus["d"] == 0


def test_birkhoff_cycle_and_constants():
    assert sbar_cycle_check(4).passed
    assert check_c0_matches_i0(6).verified_order == 6
    assert c_relations_check(6).verified_order == 6


def test_c1_from_birkhoff_matches_mirror_map():
    chain = sbar_build(6)
    s = build_series(6)
    assert chain.constants[0] == s.c0
    assert chain.constants[1] == s.c1


def test_h_ring_and_h_one_agree_on_constants():
    assert sbar_build(5, "H").constants == sbar_build(5, "Q").constants
