"""Scalar q-series of the quintic B-model.

All series live in ``QSeries`` over ``Fraction``. ``I_1`` contains
``log(q) I_0``; only the regular part ``i1reg = I_1 - log(q) I_0`` is
stored, and the ``log q`` is accounted for explicitly where it matters
(``T = log q + Treg`` and ``C_1 = 1 + D(Treg)``).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .checks import CheckReport, assert_series_equal
from .ring.laurent import LaurentL
from .ring.series import QSeries, binomial_series

FIVE_TO_FIVE = 5 ** 5


def hypergeometric_coefficient(d: int) -> int:
    """``(5d)! / (d!)^5``."""
    return factorial(5 * d) // factorial(d) ** 5


def harmonic_tail(d: int) -> Fraction:
    """``sum_{r=d+1}^{5d} 1/r`` as an exact rational."""
    return sum((Fraction(1, r) for r in range(d + 1, 5 * d + 1)), Fraction(0))


def build_hypergeometric(N: int) -> tuple[QSeries, QSeries]:
    """Return ``(i0, i1reg)`` to precision ``N``."""
    i0 = QSeries([hypergeometric_coefficient(d) for d in range(N + 1)])
    i1reg = QSeries([5 * hypergeometric_coefficient(d) * harmonic_tail(d)
                     for d in range(N + 1)])
    return i0, i1reg


def build_mirror(N: int) -> tuple[QSeries, QSeries]:
    """Return ``(Treg, mirrorRatio)`` with ``Q(q) = q * mirrorRatio``."""
    i0, i1reg = build_hypergeometric(N)
    treg = i1reg / i0
    return treg, treg.exp()


def mirror_map(N: int) -> QSeries:
    """``Q(q)`` as a series in ``q``."""
    _, ratio = build_mirror(N)
    return ratio.shift(1)


@lru_cache(maxsize=None)
def _l_power(e: int, N: int) -> QSeries:
    # L^e = (1 - 3125 q)^(-e/5)
    return binomial_series(Fraction(-e, 5), Fraction(-FIVE_TO_FIVE), N)


def build_L(N: int) -> QSeries:
    """``L = (1 - 5^5 q)^(-1/5)``."""
    return _l_power(1, N)


def l_power(e: int, N: int) -> QSeries:
    return _l_power(e, N)


def substitute_qL(f: LaurentL, N: int) -> QSeries:
    """Evaluate a Laurent polynomial in ``L`` as a q-series."""
    out = QSeries.zero(N)
    for e, a in LaurentL.coerce(f).items():
        out = out + _l_power(e, N) * a
    return out


@dataclass(frozen=True)
class QuinticSeriesSet:
    precision: int
    i0: QSeries
    i1reg: QSeries
    treg: QSeries
    mirror_ratio: QSeries
    l: QSeries
    c0: QSeries
    c1: QSeries
    x: QSeries
    x1: QSeries
    x2: QSeries
    y: QSeries
    k2: QSeries
    a2: QSeries
    a4: QSeries
    a6: QSeries

    def with_(self, **changes) -> "QuinticSeriesSet":
        """Copy with some series replaced (used for fault injection)."""
        return replace(self, **changes)

    def named(self) -> dict[str, QSeries]:
        return {"i0": self.i0, "i1reg": self.i1reg, "Treg": self.treg,
                "mirror": self.mirror_ratio.shift(1), "L": self.l,
                "C0": self.c0, "C1": self.c1, "X": self.x, "X1": self.x1,
                "X2": self.x2, "Y": self.y, "K2": self.k2, "A2": self.a2,
                "A4": self.a4, "A6": self.a6}


def generators_from(c0: QSeries, c1: QSeries):
    """``X = D C0 / C0``, ``X1 = D X``, ``X2 = D X1``, ``Y = D C1 / C1``."""
    x = c0.dop() / c0
    x1 = x.dop()
    x2 = x1.dop()
    y = c1.dop() / c1
    return x, x1, x2, y


def bmodel_from(l: QSeries, x: QSeries, x1: QSeries, x2: QSeries, y: QSeries):
    """``K2, A2, A4, A6`` from the generator series."""
    l5 = l ** 5
    inv5 = l5.inverse()
    k2 = -x * inv5
    a2 = (-y / 5 - x * Fraction(2, 5) - Fraction(3, 25)) * inv5
    a4 = (-(x * x) / 25 - (x * y) / 25 + x1 / 25 + Fraction(2, 625)) * inv5 * inv5
    a6 = (4 + x1 * 125 + x * (1 + x1 * 10) * 50
          - l5 * (1 + x * 10 + x * x * 25 + x1 * 25) * 5
          + x2 * 125 - x * x * (y - 1) * 125) * (inv5 ** 3) / 31250
    return k2, a2, a4, a6


@lru_cache(maxsize=None)
def build_series(N: int) -> QuinticSeriesSet:
    """Every scalar series of the quintic B-model to precision ``N``."""
    i0, i1reg = build_hypergeometric(N)
    treg = i1reg / i0
    ratio = treg.exp()
    l = build_L(N)
    c0 = i0
    # T = log q + Treg, and D log q = 1
    c1 = treg.dop() + 1
    x, x1, x2, y = generators_from(c0, c1)
    k2, a2, a4, a6 = bmodel_from(l, x, x1, x2, y)
    return QuinticSeriesSet(N, i0, i1reg, treg, ratio, l, c0, c1,
                            x, x1, x2, y, k2, a2, a4, a6)


def build_generators(N: int):
    s = build_series(N)
    return s.c0, s.c1, s.x, s.x1, s.x2, s.y


def build_bmodel(N: int):
    s = build_series(N)
    return s.k2, s.a2, s.a4, s.a6


def drule_rhs(l: QSeries, x: QSeries, x1: QSeries, y: QSeries) -> QSeries:
    """Right side of the ``D Y`` relation."""
    m = l ** 5 - 1
    return (m * Fraction(2, 5) + m * x * 2 - x * x * 2 - x1 * 4
            + m * y - y * y - x * y * 2)


def b_series(x: QSeries, x1: QSeries, x2: QSeries):
    """``B_1 .. B_4`` built from the ``X`` tower (``D X2`` computed directly)."""
    b1 = x * -5
    b2 = (x1 + x * x) * 25
    b3 = (x2 + x * x1 * 3 + x ** 3) * -125
    b4 = (x2.dop() + x * x2 * 4 + x1 * x1 * 3 + x * x * x1 * 6 + x ** 4) * 625
    return b1, b2, b3, b4


def check_drule(N: int, series: QuinticSeriesSet | None = None) -> CheckReport:
    s = series or build_series(N)
    lhs = s.y.dop()
    rhs = drule_rhs(s.l, s.x, s.x1, s.y)
    order = assert_series_equal("drule", lhs, rhs)
    return CheckReport("drule", order)


def check_drule2(N: int, series: QuinticSeriesSet | None = None) -> CheckReport:
    s = series or build_series(N)
    b1, b2, b3, b4 = b_series(s.x, s.x1, s.x2)
    rhs = -(s.l ** 5 - 1) * (b3 * 10 - b2 * 35 + b1 * 50 - 24)
    order = assert_series_equal("drule2", b4, rhs)
    return CheckReport("drule2", order)


def check_L(N: int, l: QSeries | None = None) -> CheckReport:
    """``L^5 (1 - 3125 q) = 1`` and ``D L = (L^6 - L)/5``."""
    l = build_L(N) if l is None else l
    one = assert_series_equal("L^5(1-3125q)=1", l ** 5 * (1 - QSeries.gen(N) * FIVE_TO_FIVE),
                              QSeries.one(N))
    assert_series_equal("DL=(L^6-L)/5", l.dop(), (l ** 6 - l) / 5)
    return CheckReport("L", one, {"coefficients": [str(c) for c in l.coeffs[:3]]})
