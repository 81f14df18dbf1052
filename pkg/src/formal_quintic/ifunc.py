"""Small I-function, Picard-Fuchs verification and the Birkhoff recursion.

The q^d coefficient of the small I-function under ``lambda_i = zeta^i`` is

    prod_{k=1}^{5d} (5H + kz) / prod_{k=1}^{d} ((H + kz)^5 - 1)

in ``Q[H]/(H^5-1)(z)``. For q-series work every degree is lifted to the
common denominator ``Den_N = prod_{k=1}^{N} ((H+kz)^5 - 1)`` so that
multiplying by scalar q-series and applying ``M = H + zD`` never needs
polynomial gcds. Restricting to ``H = 1`` gives the same objects over Q,
which is what the asymptotic analysis runs on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .checks import CheckReport, assert_series_equal
from .errors import IdentityViolation, NonUnitNormalization
from .quintic import build_hypergeometric, build_series
from .ring.hclass import (HClass, ZLaurent, ZRatFn, _series_inverse, _series_mul,
                          poly_add, poly_degree, poly_map, poly_mul, poly_pow,
                          poly_scale, poly_trim)
from .ring.series import QSeries


def _h(ring: str):
    return HClass.H() if ring == "H" else Fraction(1)


def _restrict(x):
    return x.at_one() if isinstance(x, HClass) else Fraction(x)


def denominator_factor(k: int, ring: str = "H") -> tuple:
    """``(H + kz)^5 - 1`` as a polynomial in ``z``."""
    return poly_add(poly_pow((_h(ring), Fraction(k)), 5), (Fraction(-1),))


def numerator_block(d: int, ring: str = "H") -> tuple:
    """``prod_{k=5d-4}^{5d} (5H + kz)``: the factors added at degree ``d``."""
    h5 = _h(ring) * 5
    out: tuple = (Fraction(1),)
    for k in range(5 * d - 4, 5 * d + 1):
        out = poly_mul(out, (h5, Fraction(k)))
    return out


class ZSeries:
    """q-series whose coefficients are rational functions in ``z``.

    Coefficient ``d`` is ``numerators[d] / prod_{k=1}^{N} factors[k-1]``.
    ``ring`` is ``"H"`` (coefficients in Q[H]/(H^5-1)) or ``"Q"`` (``H = 1``).
    """

    __slots__ = ("ring", "factors", "numerators")

    def __init__(self, ring: str, factors: Sequence, numerators: Sequence):
        self.ring = ring
        self.factors = tuple(factors)
        self.numerators = tuple(poly_trim(p) for p in numerators)

    @property
    def precision(self) -> int:
        return len(self.numerators) - 1

    def __eq__(self, other) -> bool:
        return (isinstance(other, ZSeries) and self.factors == other.factors
                and self.numerators == other.numerators)

    __hash__ = None

    def _new(self, numerators) -> "ZSeries":
        return ZSeries(self.ring, self.factors, numerators)

    def per_degree(self, d: int) -> ZRatFn:
        return ZRatFn(self.numerators[d], [(p, 1) for p in self.factors])

    def __add__(self, other: "ZSeries") -> "ZSeries":
        return self._new([poly_add(a, b) for a, b in zip(self.numerators, other.numerators)])

    def __sub__(self, other: "ZSeries") -> "ZSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "ZSeries":
        return self._new([poly_scale(p, c) for p in self.numerators])

    def times_z_poly(self, p: Sequence) -> "ZSeries":
        return self._new([poly_mul(n, p) for n in self.numerators])

    def m_apply(self) -> "ZSeries":
        """``M = H + z D``: degree ``d`` is multiplied by ``H + d z``."""
        h = _h(self.ring)
        return self._new([poly_mul(n, (h, Fraction(d)))
                          for d, n in enumerate(self.numerators)])

    def shift_q(self) -> "ZSeries":
        """Multiply by ``q`` keeping the precision."""
        return self._new([(Fraction(0),)] + list(self.numerators[:-1]))

    def mul_series(self, c: QSeries) -> "ZSeries":
        """Multiply by a scalar q-series (rational coefficients)."""
        n = min(self.precision, c.precision)
        out = []
        for d in range(n + 1):
            acc: tuple = (Fraction(0),)
            for e in range(d + 1):
                ce = c[d - e]
                if ce != 0:
                    acc = poly_add(acc, poly_scale(self.numerators[e], ce))
            out.append(acc)
        return ZSeries(self.ring, self.factors, out)

    def restrict_one(self) -> "ZSeries":
        """Restriction ``H = 1``."""
        if self.ring == "Q":
            return self
        return ZSeries("Q", [poly_map(p, _restrict) for p in self.factors],
                       [poly_map(p, _restrict) for p in self.numerators])

    def infinity_constant(self) -> QSeries:
        """``|_{H=1, z=inf}``: constant term in ``1/z`` after ``H = 1``."""
        s = self.restrict_one()
        top = sum(poly_degree(p) for p in s.factors)
        lead = Fraction(1)
        for p in s.factors:
            lead *= p[-1]
        out = []
        for d, num in enumerate(s.numerators):
            if poly_degree(num) > top:
                out.append(s.per_degree(d).expand("infinity", 0)[0])
            else:
                out.append((num[top] if top < len(num) else Fraction(0)) / lead)
        return QSeries(out)

    def normalize(self) -> tuple["ZSeries", QSeries]:
        """Divide by the ``H=1, z=inf`` constant; return the quotient and it."""
        c = self.infinity_constant()
        if c[0] == 0:
            raise NonUnitNormalization("normalization constant vanishes at q = 0")
        return self.mul_series(c.inverse()), c

    def expand_zero(self, orders: Sequence[int]) -> list[ZLaurent]:
        """Laurent expansion at ``z = 0`` of each degree ``d`` up to ``z^orders[d]``."""
        shift = 0
        unit: tuple = (Fraction(1),)
        for p in self.factors:
            v = next(i for i, x in enumerate(p) if x != 0)
            shift += v
            unit = poly_mul(unit, p[v:])
        n_max = max(orders) + shift + 1
        inv = _series_inverse(unit, max(n_max, 1))
        out = []
        for num, order in zip(self.numerators, orders):
            n = order + shift + 1
            if n <= 0:
                out.append(ZLaurent(0, [0]))
                continue
            out.append(ZLaurent(-shift, _series_mul(num, inv, n)))
        return out


@dataclass(frozen=True)
class IFunction:
    """Small I-function: ``per_degree[d]`` is the reduced q^d coefficient."""
    precision: int
    ring: str
    per_degree: tuple

    def lifted(self) -> ZSeries:
        return _lifted(self.precision, self.ring)


@lru_cache(maxsize=None)
def _factors(N: int, ring: str) -> tuple:
    return tuple(denominator_factor(k, ring) for k in range(1, N + 1))


@lru_cache(maxsize=None)
def _numerators(N: int, ring: str) -> tuple:
    nums = [(Fraction(1),)]
    for d in range(1, N + 1):
        nums.append(poly_mul(nums[-1], numerator_block(d, ring)))
    return tuple(nums)


@lru_cache(maxsize=None)
def _lifted(N: int, ring: str) -> ZSeries:
    factors = _factors(N, ring)
    nums = _numerators(N, ring)
    lifted = [None] * (N + 1)
    tail: tuple = (Fraction(1),)
    for d in range(N, -1, -1):
        lifted[d] = poly_mul(nums[d], tail)
        if d:
            tail = poly_mul(tail, factors[d - 1])
    return ZSeries(ring, factors, lifted)


def ibar_build(Nq: int, ring: str = "H") -> IFunction:
    factors = _factors(Nq, ring)
    nums = _numerators(Nq, ring)
    per = tuple(ZRatFn(nums[d], [(factors[k], 1) for k in range(d)])
                for d in range(Nq + 1))
    return IFunction(Nq, ring, per)


def m_apply(F: ZSeries) -> ZSeries:
    return F.m_apply()


# ---------------------------------------------------------------------------
# Picard-Fuchs

def picard_fuchs_residual(F: ZSeries, constant_term=1) -> ZSeries:
    """``(M^5 - c - q prod_{k=1}^5 (5M + kz)) F`` with ``c = constant_term``."""
    m5 = F
    for _ in range(5):
        m5 = m5.m_apply()
    tail = F
    for k in range(5, 0, -1):
        tail = tail.m_apply().scale(5) + tail.times_z_poly((Fraction(0), Fraction(k)))
    return m5 - F.scale(constant_term) - tail.shift_q()


def picard_fuchs_check(Nq: int, Nz: int, ibar: ZSeries | None = None,
                       constant_term=1) -> CheckReport:
    F = ibar if ibar is not None else _lifted(Nq, "H")
    residual = picard_fuchs_residual(F, constant_term)
    expansions = residual.expand_zero([Nz] * (residual.precision + 1))
    for d, ex in enumerate(expansions[:Nq + 1]):
        for e, c in ex.items():
            raise IdentityViolation("Picard-Fuchs", {"d": d, "z": e}, f"coefficient {c}")
    exact = all(poly_degree(p) < 0 for p in residual.numerators[:Nq + 1])
    return CheckReport("picard-fuchs", Nq, {"z_order": Nz, "exact": exact})


# ---------------------------------------------------------------------------
# Birkhoff factorization

@dataclass(frozen=True)
class SBarSeries:
    label: int
    series: ZSeries
    normalization: QSeries

    @property
    def per_degree(self) -> list[ZRatFn]:
        return [self.series.per_degree(d) for d in range(self.series.precision + 1)]


@dataclass(frozen=True)
class Birkhoff:
    sbar: tuple
    constants: tuple

    @property
    def precision(self) -> int:
        return self.sbar[0].series.precision


def birkhoff_chain(F: ZSeries, steps: int = 5) -> Birkhoff:
    """Normalize ``F`` and iterate ``S -> M S / (M S)|_{H=1,z=inf}``."""
    s, c = F.normalize()
    sbar = [SBarSeries(0, s, c)]
    for j in range(1, steps):
        s, c = s.m_apply().normalize()
        sbar.append(SBarSeries(j, s, c))
    return Birkhoff(tuple(sbar), tuple(x.normalization for x in sbar))


@lru_cache(maxsize=None)
def sbar_build(Nq: int, ring: str = "H") -> Birkhoff:
    return birkhoff_chain(_lifted(Nq, ring))


def _first_numerator_difference(a: ZSeries, b: ZSeries):
    for d, (p, r) in enumerate(zip(a.numerators, b.numerators)):
        if p != r:
            diff = poly_add(p, poly_scale(r, -1))
            e = next(i for i, x in enumerate(diff) if x != 0)
            return d, e
    return None


def sbar_cycle_check(Nq: int, chain: Birkhoff | None = None) -> CheckReport:
    """The sixth normalized step applied to ``S(H^4)`` must give back ``S(1)``."""
    chain = chain or sbar_build(Nq)
    closed, c5 = chain.sbar[4].series.m_apply().normalize()
    where = _first_numerator_difference(closed, chain.sbar[0].series)
    if where is not None:
        d, e = where
        raise IdentityViolation("Birkhoff cycle", {"d": d, "numerator_z": e})
    assert_series_equal("C5 = C0", c5, chain.constants[0])
    return CheckReport("birkhoff-cycle", closed.precision,
                       {"c5_equals_c0": True})


def check_c0_matches_i0(Nq: int, chain: Birkhoff | None = None) -> CheckReport:
    chain = chain or sbar_build(Nq)
    i0, _ = build_hypergeometric(Nq)
    order = assert_series_equal("C0 = I0", chain.constants[0], i0)
    return CheckReport("c0-equals-i0", order)


def c_relations_check(Nq: int, chain: Birkhoff | None = None) -> CheckReport:
    chain = chain or sbar_build(Nq)
    c = chain.constants
    l5 = build_series(Nq).l ** 5
    order = assert_series_equal("C0C1C2C3C4 = L^5", c[0] * c[1] * c[2] * c[3] * c[4], l5)
    assert_series_equal("C0 = C4", c[0], c[4])
    assert_series_equal("C1 = C3", c[1], c[3])
    assert_series_equal("C2 = L^5/(C0 C1)^2", c[2], l5 / (c[0] * c[1]) ** 2)
    return CheckReport("c-relations", order)


def i0_limit(d: int) -> Fraction:
    """``(5d)!/(d!)^5``: the ``H=1, z=inf`` value of the q^d coefficient."""
    return Fraction(factorial(5 * d), factorial(d) ** 5)
