"""Polynomials over Q[L, 1/L] in four generators, and the derivation D.

Two coordinate systems describe the same differential ring:

* :class:`GenPoly` in ``X, X1, X2, Y`` (log-derivatives of ``C0, C1``),
* :class:`APoly` in ``K2, A2, A4, A6`` (the B-model coordinates).

The change of variables is triangular with unit leading coefficients, so
both rings are free and :func:`coords` is an isomorphism.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from ..quintic import QuinticSeriesSet, build_series, substitute_qL
from ..ring.laurent import LaurentL
from ..ring.series import QSeries

Monomial = tuple  # exponents of the four generators


class _Poly:
    """Sparse polynomial ``{exponent 4-tuple: LaurentL}``."""

    VARS: tuple = ()
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        acc: dict = {}
        for mono, c in (terms or {}).items():
            c = LaurentL.coerce(c)
            if c:
                mono = tuple(mono)
                prev = acc.get(mono)
                acc[mono] = c if prev is None else prev + c
        self.terms = {m: c for m, c in sorted(acc.items()) if c}

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c):
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, i: int | str, coeff=1):
        if isinstance(i, str):
            i = cls.VARS.index(i)
        mono = [0, 0, 0, 0]
        mono[i] = 1
        return cls({tuple(mono): coeff})

    @classmethod
    def lmono(cls, e: int, c=1):
        """``c * L^e``."""
        return cls.const(LaurentL.mono(e, c))

    # -- protocol ---------------------------------------------------------
    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms.items():
            m = "*".join(f"{v}^{k}" if k > 1 else v
                         for v, k in zip(self.VARS, mono) if k)
            parts.append(f"({c})" + (f"*{m}" if m else ""))
        return " + ".join(parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, _Poly):
            other = type(self).const(other)
        return type(self) is type(other) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, tuple(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, mono: Monomial) -> LaurentL:
        return self.terms.get(tuple(mono), LaurentL())

    def _coerce(self, other):
        if isinstance(other, _Poly):
            if type(other) is not type(self):
                raise TypeError("cannot mix coordinate systems")
            return other
        return type(self).const(other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc[m] + c if m in acc else c
        return type(self)(acc)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, _Poly):
            c = LaurentL.coerce(other)
            return type(self)({m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                p = c1 * c2
                acc[m] = acc[m] + p if m in acc else p
        return type(self)(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return type(self)({m: c / other for m, c in self.terms.items()})

    def __pow__(self, k: int):
        out = type(self).const(1)
        for _ in range(k):
            out = out * self
        return out

    # -- structure --------------------------------------------------------
    def degree_in(self, i: int | str) -> int:
        if isinstance(i, str):
            i = self.VARS.index(i)
        return max((m[i] for m in self.terms), default=-1)

    def coefficient_in(self, i: int | str, k: int):
        """Coefficient of ``var_i^k`` as a polynomial in the other variables."""
        if isinstance(i, str):
            i = self.VARS.index(i)
        out = {}
        for m, c in self.terms.items():
            if m[i] == k:
                mm = list(m)
                mm[i] = 0
                out[tuple(mm)] = c
        return type(self)(out)

    def partial(self, i: int | str):
        """Formal partial derivative with respect to a generator."""
        if isinstance(i, str):
            i = self.VARS.index(i)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * m[i]
        return type(self)(out)

    def constant_part(self) -> LaurentL:
        return self.coefficient((0, 0, 0, 0))

    def l_window(self) -> tuple[int, int] | None:
        wins = [c.window() for c in self.terms.values()]
        if not wins:
            return None
        return min(w[0] for w in wins), max(w[1] for w in wins)

    def substitute(self, images: list, target: type):
        """Replace generator ``i`` by ``images[i]`` (polynomials of ``target``)."""
        cache: dict = {}

        def power(i, k):
            if (i, k) not in cache:
                cache[(i, k)] = target.const(1) if k == 0 else power(i, k - 1) * images[i]
            return cache[(i, k)]

        out = target()
        for m, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(m):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def to_json(self) -> dict:
        out = {}
        for m, c in self.terms.items():
            name = " ".join(f"{v}^{k}" for v, k in zip(self.VARS, m))
            out[name] = c.to_json()
        return out


class GenPoly(_Poly):
    VARS = ("X", "X1", "X2", "Y")
    __slots__ = ()


class APoly(_Poly):
    VARS = ("K2", "A2", "A4", "A6")
    __slots__ = ()


# ---------------------------------------------------------------------------
# the derivation D

def d_laurent(c: LaurentL) -> LaurentL:
    """``D`` on ``Q[L, 1/L]`` using ``D L = (L^6 - L)/5``."""
    out = LaurentL()
    for e, a in c.items():
        out = out + LaurentL({e + 5: a * Fraction(e, 5), e: -a * Fraction(e, 5)})
    return out


def _L(e: int, c=1) -> GenPoly:
    return GenPoly.lmono(e, c)


@lru_cache(maxsize=None)
def generator_derivatives() -> tuple:
    """``D X, D X1, D X2, D Y`` as elements of the generator ring."""
    X, X1, X2, Y = (GenPoly.var(i) for i in range(4))
    m = _L(5) - 1
    dY = (m * Fraction(2, 5) + m * X * 2 - X * X * 2 - X1 * 4
          + m * Y - Y * Y - X * Y * 2)
    b1 = X * -5
    b2 = (X1 + X * X) * 25
    b3 = (X2 + X * X1 * 3 + X ** 3) * -125
    dX2 = (-(m * (b3 * 10 - b2 * 35 + b1 * 50 - 24)) / 625
           - X * X2 * 4 - X1 * X1 * 3 - X * X * X1 * 6 - X ** 4)
    return (X1, X2, dX2, dY)


def gen_D(p: GenPoly) -> GenPoly:
    """Leibniz extension of ``D`` to ``Q[L^{+-1}][X, X1, X2, Y]``."""
    dvars = generator_derivatives()
    out = GenPoly()
    for m, c in p.terms.items():
        dc = d_laurent(c)
        if dc:
            out = out + GenPoly({m: dc})
        for i, k in enumerate(m):
            if k:
                mm = list(m)
                mm[i] -= 1
                out = out + GenPoly({tuple(mm): c * k}) * dvars[i]
    return out


# ---------------------------------------------------------------------------
# coordinates

@lru_cache(maxsize=None)
def a_images() -> tuple:
    """``K2, A2, A4, A6`` written in the generators."""
    X, X1, X2, Y = (GenPoly.var(i) for i in range(4))
    k2 = -X * LaurentL.mono(-5)
    a2 = (-Y / 5 - X * Fraction(2, 5) - Fraction(3, 25)) * LaurentL.mono(-5)
    a4 = (-(X * X) / 25 - (X * Y) / 25 + X1 / 25 + Fraction(2, 625)) * LaurentL.mono(-10)
    a6 = (4 + X1 * 125 + X * (1 + X1 * 10) * 50
          - (1 + X * 10 + X * X * 25 + X1 * 25) * LaurentL.mono(5, 5)
          + X2 * 125 - X * X * (Y - 1) * 125) * LaurentL.mono(-15, Fraction(1, 31250))
    return (k2, a2, a4, a6)


@lru_cache(maxsize=None)
def x_images() -> tuple:
    """``X, X1, X2, Y`` written in the B-model coordinates (triangular inverse)."""
    K2, A2, A4, A6 = (APoly.var(i) for i in range(4))
    L5 = LaurentL.mono(5)
    X = -K2 * L5
    Y = A2 * LaurentL.mono(5, -5) + K2 * LaurentL.mono(5, 2) - Fraction(3, 5)
    X1 = A4 * LaurentL.mono(10, 25) + X * X + X * Y - Fraction(2, 25)
    X2 = (A6 * LaurentL.mono(15, 31250) - 4 - X1 * 125 - X * (1 + X1 * 10) * 50
          + (1 + X * 10 + X * X * 25 + X1 * 25) * LaurentL.mono(5, 5)
          + X * X * (Y - 1) * 125) / 125
    return (X, X1, X2, Y)


def to_a(p: GenPoly) -> APoly:
    return p.substitute(list(x_images()), APoly)


def to_x(p: APoly) -> GenPoly:
    return p.substitute(list(a_images()), GenPoly)


def coords(p, direction: str):
    """``AtoX`` or ``XtoA`` change of coordinates."""
    if direction == "AtoX":
        if not isinstance(p, APoly):
            raise TypeError("AtoX expects an APoly")
        return to_x(p)
    if direction == "XtoA":
        if not isinstance(p, GenPoly):
            raise TypeError("XtoA expects a GenPoly")
        return to_a(p)
    raise ValueError(f"unknown direction {direction!r}")


# ---------------------------------------------------------------------------
# evaluation as q-series

def _variable_series(kind: type, s: QuinticSeriesSet) -> tuple:
    if kind is GenPoly:
        return (s.x, s.x1, s.x2, s.y)
    return (s.k2, s.a2, s.a4, s.a6)


def eval_gen(p: _Poly, N: int, series: QuinticSeriesSet | None = None) -> QSeries:
    """q-series value of ``p`` with the concrete generator series substituted."""
    s = series or build_series(N)
    vs = _variable_series(type(p), s)
    cache: dict = {}

    def power(i, k):
        if (i, k) not in cache:
            cache[(i, k)] = QSeries.one(N) if k == 0 else power(i, k - 1) * vs[i]
        return cache[(i, k)]

    out = QSeries.zero(N)
    for m, c in p.terms.items():
        term = substitute_qL(c, N)
        for i, k in enumerate(m):
            if k:
                term = term * power(i, k)
        out = out + term
    return out
