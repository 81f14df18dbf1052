from fractions import Fraction
from math import factorial

import sympy

from formal_quintic.hae.wallcross import inverse_mirror_map
from formal_quintic.quintic import (build_hypergeometric, build_L, build_series, check_drule,
                                    check_drule2, check_L, hypergeometric_coefficient,
                                    mirror_map)
from formal_quintic.ring.series import QSeries


def test_hypergeometric_coefficients_from_factorials():
    assert [hypergeometric_coefficient(d) for d in range(3)] == [1, 120, 113400]
    i0, i1reg = build_hypergeometric(3)
    assert i0[3] == factorial(15) // factorial(3) ** 5
    # 5 * 120 * (1/2 + 1/3 + 1/4 + 1/5)
    assert i1reg[0] == 0 and i1reg[1] == 770


def test_L_against_binomial_expansion():
    qs = sympy.symbols("q")
    ref = sympy.series((1 - 3125 * qs) ** sympy.Rational(-1, 5), qs, 0, 8).removeO()
    L = build_L(7)
    for n in range(8):
        c = ref.coeff(qs, n)
        assert L[n] == Fraction(int(c.p), int(c.q))
    assert list(L.coeffs[:3]) == [1, 625, 1171875]


def test_L_identities():
    assert check_L(30).verified_order == 30


def test_mirror_map_known_coefficients():
    assert list(mirror_map(3).coeffs) == [0, 1, 770, 1014275]


def test_generators_at_zero():
    s = build_series(4)
    assert s.c0[0] == 1 and s.c1[0] == 1
    assert s.x[0] == 0 and s.y[0] == 0 and s.k2[0] == 0
    assert s.a2[0] == Fraction(-3, 25)
    assert s.a4[0] == Fraction(2, 625)


def test_yukawa_coupling_gives_instanton_numbers():
    # 5 L^5 / (C0^2 C1^3) in the Q variable is 5 + sum n_d d^3 Q^d/(1 - Q^d)
    N = 3
    s = build_series(N)
    yuk = (s.l ** 5 * 5 / (s.c0 ** 2 * s.c1 ** 3)).compose(inverse_mirror_map(N))
    n1, n2 = 2875, 609250
    assert list(yuk.coeffs[:3]) == [5, n1, n1 + 8 * n2]


def test_drule_relations():
    assert check_drule(20).verified_order == 20
    assert check_drule2(20).verified_order == 20


def test_c1_is_derivative_of_mirror_coordinate():
    s = build_series(6)
    assert s.c1 == s.treg.dop() + 1
    assert s.mirror_ratio == s.treg.exp()
    assert isinstance(s.named()["mirror"], QSeries)
