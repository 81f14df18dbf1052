"""Truncated power series in ``q`` over an exact coefficient ring.

A :class:`QSeries` of precision ``N`` stores the coefficients of
``q^0 .. q^N``; everything beyond is unknown, never assumed zero.
Coefficients are ``Fraction`` by default but any exact ring whose elements
support ``+ - *`` with ints (e.g. :class:`~formal_quintic.ring.hclass.HClass`)
works, provided units expose ``inverse()`` or can be divided into 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from ..errors import (BadConstantTerm, CompositionRequiresZeroConstant,
                      DivisionByNonUnit, NonUnit, NotReversible)


def _is_zero(c) -> bool:
    return c == 0


def invert_scalar(c):
    """Inverse of a coefficient-ring element; raises on non-units."""
    inv = getattr(c, "inverse", None)
    if inv is not None:
        try:
            return inv()
        except NonUnit as exc:
            raise DivisionByNonUnit(str(exc)) from exc
    if c == 0:
        raise DivisionByNonUnit("constant term is zero")
    return Fraction(1) / c


class QSeries:
    """Truncated power series ``c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, precision: int | None = None):
        cs = [c if not isinstance(c, int) else Fraction(c) for c in coeffs]
        if precision is not None:
            if precision < 0:
                raise ValueError("precision must be non-negative")
            cs = cs[:precision + 1]
            cs.extend(Fraction(0) for _ in range(precision + 1 - len(cs)))
        if not cs:
            raise ValueError("a series needs at least the q^0 coefficient")
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------
    @classmethod
    def constant(cls, c, precision: int) -> "QSeries":
        return cls([c], precision)

    @classmethod
    def zero(cls, precision: int) -> "QSeries":
        return cls([], precision) if precision >= 0 else cls([0])

    @classmethod
    def one(cls, precision: int) -> "QSeries":
        return cls([1], precision)

    @classmethod
    def gen(cls, precision: int) -> "QSeries":
        """The series ``q`` itself."""
        return cls([0, 1], precision)

    @classmethod
    def from_function(cls, f: Callable[[int], object], precision: int) -> "QSeries":
        return cls([f(n) for n in range(precision + 1)])

    # -- basic protocol -------------------------------------------------
    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c != 0:
                terms.append(f"{c}" if n == 0 else f"({c})*q^{n}")
        body = " + ".join(terms) or "0"
        return f"QSeries({body} + O(q^{self.precision + 1}))"

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            other = QSeries.constant(other, self.precision)
        n = min(self.precision, other.precision)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    __hash__ = None  # equality is only up to a common precision

    def truncate(self, precision: int) -> "QSeries":
        if precision > self.precision:
            raise ValueError("truncate cannot raise precision")
        return QSeries(self.coeffs[:precision + 1])

    def valuation(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return n
        return None

    def first_difference(self, other: "QSeries") -> int | None:
        """Index of the first differing coefficient, up to common precision."""
        n = min(self.precision, other.precision)
        for i in range(n + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def map(self, f: Callable) -> "QSeries":
        return QSeries([f(c) for c in self.coeffs])

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        return QSeries.constant(other, self.precision)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.precision, other.precision)
        return QSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return QSeries([c * other for c in self.coeffs])
        n = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if _is_zero(ai):
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if not _is_zero(bj):
                    out[i + j] = out[i + j] + ai * bj
        return QSeries(out)

    def __rmul__(self, other):
        return QSeries([other * c for c in self.coeffs])

    def inverse(self) -> "QSeries":
        a = self.coeffs
        b0 = invert_scalar(a[0])
        out = [b0]
        for n in range(1, len(a)):
            s = 0
            for k in range(1, n + 1):
                if not _is_zero(a[k]):
                    s = s + a[k] * out[n - k]
            out.append(-(s * b0))
        return QSeries(out)

    def __truediv__(self, other):
        if not isinstance(other, QSeries):
            return self * invert_scalar(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = QSeries.one(self.precision)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- calculus -------------------------------------------------------
    def dop(self) -> "QSeries":
        """``D = q d/dq``; coefficient ``k`` becomes ``k * c_k``."""
        return QSeries([k * c for k, c in enumerate(self.coeffs)])

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q^k`` (``k >= 0``) keeping the precision."""
        n = self.precision
        return QSeries([0] * min(k, n + 1) + list(self.coeffs[:max(n + 1 - k, 0)]))

    def exp(self) -> "QSeries":
        a = self.coeffs
        if not _is_zero(a[0]):
            raise BadConstantTerm("exp needs a zero constant term")
        out = [Fraction(1)]
        for n in range(1, len(a)):
            s = 0
            for k in range(1, n + 1):
                if not _is_zero(a[k]):
                    s = s + (k * a[k]) * out[n - k]
            out.append(s * Fraction(1, n))
        return QSeries(out)

    def log(self) -> "QSeries":
        if self.coeffs[0] != 1:
            raise BadConstantTerm("log needs constant term 1")
        ratio = (self.dop() / self).coeffs
        return QSeries([Fraction(0)] + [ratio[n] * Fraction(1, n)
                                        for n in range(1, len(ratio))])

    def compose(self, inner: "QSeries") -> "QSeries":
        """``self(inner(q))``; ``inner`` must have zero constant term."""
        if not _is_zero(inner.coeffs[0]):
            raise CompositionRequiresZeroConstant(
                "inner series has non-zero constant term")
        n = min(self.precision, inner.precision)
        inner = inner.truncate(n)
        acc = QSeries.constant(self.coeffs[n], n)
        for c in reversed(self.coeffs[:n]):
            acc = acc * inner + c
        return acc

    def __call__(self, inner: "QSeries") -> "QSeries":
        return self.compose(inner)

    def reverse(self) -> "QSeries":
        """Compositional inverse via Lagrange inversion.

        ``[q^n] b = (1/n) [w^{n-1}] (w / a(w))^n``.
        """
        a = self.coeffs
        n = self.precision
        if not _is_zero(a[0]) or n < 1 or _is_zero(a[1]):
            raise NotReversible("need a_0 = 0 and a_1 invertible")
        try:
            invert_scalar(a[1])
        except DivisionByNonUnit as exc:
            raise NotReversible("a_1 is not a unit") from exc
        # w / a(w) = 1 / (a_1 + a_2 w + ...)
        phi = QSeries(a[1:], n - 1).inverse()
        out = [Fraction(0)]
        power = QSeries.one(n - 1)
        for m in range(1, n + 1):
            power = power * phi
            out.append(power.coeffs[m - 1] * Fraction(1, m))
        return QSeries(out)


def series_arith(a: QSeries, b: QSeries, kind: str) -> QSeries:
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__,
           "div": a.__truediv__}
    try:
        return ops[kind](b)
    except KeyError:
        raise ValueError(f"unknown series operation {kind!r}") from None


def series_exp_log(a: QSeries, kind: str) -> QSeries:
    if kind == "exp":
        return a.exp()
    if kind == "log":
        return a.log()
    raise ValueError(f"unknown kind {kind!r}")


def dop(a: QSeries) -> QSeries:
    return a.dop()


def series_compose(outer: QSeries, inner: QSeries) -> QSeries:
    return outer.compose(inner)


def series_reverse(a: QSeries) -> QSeries:
    return a.reverse()


def binomial_series(exponent: Fraction, scale: Fraction, precision: int) -> QSeries:
    """``(1 + scale*q)^exponent`` for rational ``exponent``."""
    out = [Fraction(1)]
    c = Fraction(1)
    for n in range(1, precision + 1):
        c = c * (exponent - (n - 1)) / n * scale
        out.append(c)
    return QSeries(out)
