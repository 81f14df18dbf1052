"""The ring Q[H]/(H^5 - 1), polynomials in z over it, and rational functions.

Under the equivariant specialization ``lambda_i = zeta^i`` the relation
``prod_i (H - lambda_i) = 0`` becomes ``H^5 = 1``. The ring is isomorphic to
``Q x Q(zeta_5)`` and therefore has zero divisors (``H - 1`` is one).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import NonUnit, NonUnitLeadingCoefficient
from .linalg import linsolve

RANK = 5


class HClass:
    """Element ``c_0 + c_1 H + ... + c_4 H^4`` with ``H^5 = 1``."""

    __slots__ = ("c",)

    def __init__(self, components: Sequence = (0,)):
        cs = [Fraction(x) for x in components]
        if len(cs) > RANK:
            # fold higher powers using H^5 = 1
            folded = [Fraction(0)] * RANK
            for i, x in enumerate(cs):
                folded[i % RANK] += x
            cs = folded
        cs.extend([Fraction(0)] * (RANK - len(cs)))
        self.c = tuple(cs)

    @classmethod
    def H(cls) -> "HClass":
        return cls((0, 1))

    @classmethod
    def coerce(cls, x) -> "HClass":
        return x if isinstance(x, HClass) else cls((x,))

    def __repr__(self) -> str:
        terms = [f"{x}" if i == 0 else f"{x}*H^{i}"
                 for i, x in enumerate(self.c) if x]
        return "HClass(" + (" + ".join(terms) or "0") + ")"

    def __eq__(self, other) -> bool:
        if isinstance(other, HClass):
            return self.c == other.c
        try:
            return self.c == HClass((other,)).c
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.c)

    def __bool__(self) -> bool:
        return any(self.c)

    def __add__(self, other):
        if isinstance(other, HClass):
            return HClass([a + b for a, b in zip(self.c, other.c)])
        return HClass((self.c[0] + other,) + self.c[1:])

    __radd__ = __add__

    def __neg__(self):
        return HClass([-a for a in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HClass):
            a, b = self.c, other.c
            out = [Fraction(0)] * RANK
            for i in range(RANK):
                ai = a[i]
                if not ai:
                    continue
                for j in range(RANK):
                    if b[j]:
                        out[(i + j) % RANK] += ai * b[j]
            return HClass(out)
        return HClass([a * other for a in self.c])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, HClass):
            return self * other.inverse()
        return HClass([a / other for a in self.c])

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = HClass((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def matrix(self) -> list[list[Fraction]]:
        """Multiplication-by-self in the basis ``1, H, .., H^4`` (circulant)."""
        return [[self.c[(i - j) % RANK] for j in range(RANK)] for i in range(RANK)]

    def inverse(self) -> "HClass":
        sol = linsolve(self.matrix(), [1, 0, 0, 0, 0])
        if not isinstance(sol, tuple):
            raise NonUnit(f"{self!r} is a zero divisor in Q[H]/(H^5-1)")
        return HClass(sol)

    def is_unit(self) -> bool:
        return isinstance(linsolve(self.matrix(), [1, 0, 0, 0, 0]), tuple)

    def at_one(self) -> Fraction:
        """Restriction ``H = 1`` (the fixed point ``lambda_0 = 1``)."""
        return sum(self.c, Fraction(0))

    def trace(self) -> Fraction:
        """Trace of multiplication by ``self``: equals ``sum_i self(zeta^i)``."""
        return RANK * self.c[0]


def hclass_invert(a: HClass) -> HClass:
    return a.inverse()


def root_elementary_symmetric() -> list[Fraction]:
    """``e_1..e_5`` of the five roots of ``H^5 - 1``.

    Computed from the power sums ``p_k = trace(H^k)`` with Newton's
    identities, independently of the defining polynomial's coefficients.
    """
    H = HClass.H()
    p = [None] + [(H ** k).trace() for k in range(1, RANK + 1)]
    e = [Fraction(1)]
    for k in range(1, RANK + 1):
        s = sum(((-1) ** (i - 1)) * e[k - i] * p[i] for i in range(1, k + 1))
        e.append(s / k)
    return e[1:]


# ---------------------------------------------------------------------------
# polynomials in z: tuples of coefficients, lowest degree first

def poly_trim(p: Sequence) -> tuple:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p) if p else (Fraction(0),)


def poly_add(a: Sequence, b: Sequence) -> tuple:
    n = max(len(a), len(b))
    zero = Fraction(0)
    return poly_trim([(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero)
                      for i in range(n)])


def poly_scale(a: Sequence, s) -> tuple:
    return poly_trim([x * s for x in a])


def poly_mul(a: Sequence, b: Sequence) -> tuple:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] = out[i + j] + x * y
    return poly_trim(out)


def poly_pow(a: Sequence, k: int) -> tuple:
    out: tuple = (Fraction(1),)
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def poly_degree(p: Sequence) -> int:
    p = poly_trim(p)
    return -1 if len(p) == 1 and p[0] == 0 else len(p) - 1


def poly_valuation(p: Sequence) -> int | None:
    for i, x in enumerate(p):
        if x != 0:
            return i
    return None


def poly_map(p: Sequence, f) -> tuple:
    return poly_trim([f(x) for x in p])


def _series_inverse(u: Sequence, n: int) -> list:
    """First ``n`` coefficients of ``1/u`` for a power series with unit ``u[0]``."""
    u0 = u[0]
    try:
        b0 = u0.inverse() if isinstance(u0, HClass) else Fraction(1) / u0
    except (NonUnit, ZeroDivisionError) as exc:
        raise NonUnitLeadingCoefficient(f"{u0!r} is not invertible") from exc
    out = [b0]
    for m in range(1, n):
        s = Fraction(0)
        for k in range(1, min(m, len(u) - 1) + 1):
            if u[k] != 0:
                s = s + u[k] * out[m - k]
        out.append(-(s * b0))
    return out


def _series_mul(a: Sequence, b: Sequence, n: int) -> list:
    out = [Fraction(0)] * n
    for i, x in enumerate(a[:n]):
        if x == 0:
            continue
        for j in range(min(len(b), n - i)):
            if b[j] != 0:
                out[i + j] = out[i + j] + x * b[j]
    return out


# ---------------------------------------------------------------------------

class ZLaurent:
    """Laurent polynomial ``sum_{e=low}^{high} c_e z^e``."""

    __slots__ = ("low", "coeffs")

    def __init__(self, low: int, coeffs: Sequence):
        cs = list(coeffs)
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        cs = cs[start:]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            self.low, self.coeffs = 0, (Fraction(0),)
        else:
            self.low, self.coeffs = low + start, tuple(cs)

    @classmethod
    def monomial(cls, c, e: int) -> "ZLaurent":
        return cls(e, [c])

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def __getitem__(self, e: int):
        i = e - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield self.low + i, c

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*z^{e}" for e, c in self.items()) or "0"
        return f"ZLaurent({body})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZLaurent):
            other = ZLaurent(0, [other])
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.low == other.low and self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, ZLaurent):
            other = ZLaurent(0, [other])
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        return ZLaurent(lo, [self[e] + other[e] for e in range(lo, hi + 1)])

    __radd__ = __add__

    def __neg__(self):
        return ZLaurent(self.low, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ZLaurent):
            return ZLaurent(self.low, [c * other for c in self.coeffs])
        return ZLaurent(self.low + other.low, poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def shift(self, k: int) -> "ZLaurent":
        return ZLaurent(self.low + k, self.coeffs)

    def map(self, f) -> "ZLaurent":
        return ZLaurent(self.low, [f(c) for c in self.coeffs])

    def truncate_above(self, e: int) -> "ZLaurent":
        return ZLaurent(self.low, self.coeffs[:max(e - self.low + 1, 0)])

    def truncate_below(self, e: int) -> "ZLaurent":
        skip = max(e - self.low, 0)
        return ZLaurent(self.low + skip, self.coeffs[skip:])


def _factor_key(p: Sequence) -> tuple:
    p = poly_trim(p)
    if any(isinstance(x, HClass) for x in p):
        return tuple(HClass.coerce(x).c for x in p)
    return tuple(Fraction(x) for x in p)


class ZRatFn:
    """Rational function ``numerator / prod_i factor_i^{m_i}`` in ``z``.

    Denominators are kept factored; arithmetic merges the factor multisets
    (max multiplicity for sums, added multiplicities for products).
    """

    __slots__ = ("numerator", "factors")

    def __init__(self, numerator: Sequence, factors: Sequence = ()):
        self.numerator = poly_trim(numerator)
        merged: dict = {}
        polys: dict = {}
        for p, m in factors:
            p = poly_trim(p)
            if poly_degree(p) < 0:
                raise ZeroDivisionError("zero denominator factor")
            key = _factor_key(p)
            merged[key] = merged.get(key, 0) + m
            polys[key] = p
        self.factors = tuple((polys[k], merged[k]) for k in sorted(merged)
                             if merged[k])

    def __repr__(self) -> str:
        return f"ZRatFn(num={self.numerator!r}, factors={self.factors!r})"

    def _multiset(self) -> dict:
        return {_factor_key(p): (p, m) for p, m in self.factors}

    def with_factors(self, target: dict) -> tuple:
        """Numerator re-expressed over the (larger) factor multiset ``target``."""
        own = self._multiset()
        num = self.numerator
        for key, (p, m) in target.items():
            extra = m - own.get(key, (p, 0))[1]
            if extra < 0:
                raise ValueError("target does not contain the own denominator")
            if extra:
                num = poly_mul(num, poly_pow(p, extra))
        return num

    def __add__(self, other):
        if not isinstance(other, ZRatFn):
            other = ZRatFn([other])
        a, b = self._multiset(), other._multiset()
        target = dict(a)
        for key, (p, m) in b.items():
            if key not in target or target[key][1] < m:
                target[key] = (p, m)
        num = poly_add(self.with_factors(target), other.with_factors(target))
        return ZRatFn(num, list(target.values()))

    __radd__ = __add__

    def __neg__(self):
        return ZRatFn(poly_scale(self.numerator, -1), self.factors)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ZRatFn):
            return ZRatFn(poly_mul(self.numerator, other.numerator),
                          self.factors + other.factors)
        return ZRatFn(poly_scale(self.numerator, other), self.factors)

    __rmul__ = __mul__

    def times_poly(self, p: Sequence) -> "ZRatFn":
        return ZRatFn(poly_mul(self.numerator, p), self.factors)

    def map(self, f) -> "ZRatFn":
        """Apply a ring morphism (e.g. ``H -> 1``) to every coefficient."""
        return ZRatFn(poly_map(self.numerator, f),
                      [(poly_map(p, f), m) for p, m in self.factors])

    def is_zero(self) -> bool:
        return poly_degree(self.numerator) < 0

    def pole_order_bound(self) -> int:
        return sum(m * (poly_valuation(p) or 0) for p, m in self.factors)

    def expand(self, at: str, order: int) -> ZLaurent:
        return zratfn_expand(self, at, order)


def zratfn_expand(f: ZRatFn, at: str, order: int) -> ZLaurent:
    """Truncated Laurent expansion of ``f``.

    ``at="zero"`` keeps exponents ``<= order`` of the expansion around
    ``z = 0``; ``at="infinity"`` keeps exponents ``>= -order`` of the
    expansion in ``1/z``.
    """
    if f.is_zero():
        return ZLaurent(0, [0])
    if at in ("zero", "zeroSide"):
        shift = 0
        units = []
        for p, m in f.factors:
            v = poly_valuation(p)
            shift += v * m
            units.append((p[v:], m))
        num_v = poly_valuation(f.numerator)
        # exponents of the result run from num_v - shift upwards
        n = order + shift - num_v + 1
        if n <= 0:
            return ZLaurent(0, [0])
        acc = list(f.numerator[num_v:num_v + n])
        for u, m in units:
            inv = _series_inverse(u, n)
            for _ in range(m):
                acc = _series_mul(acc, inv, n)
        return ZLaurent(num_v - shift, acc)
    if at in ("infinity", "infinitySide"):
        top = poly_degree(f.numerator)
        units = []
        for p, m in f.factors:
            top -= poly_degree(p) * m
            units.append((tuple(reversed(poly_trim(p))), m))
        n = top + order + 1
        if n <= 0:
            return ZLaurent(0, [0])
        acc = list(reversed(f.numerator))[:n]
        for u, m in units:
            inv = _series_inverse(u, n)
            for _ in range(m):
                acc = _series_mul(acc, inv, n)
        # coefficient i of acc multiplies z^(top - i)
        return ZLaurent(top - n + 1, list(reversed(acc)))
    raise ValueError(f"unknown expansion point {at!r}")
