"""Laurent polynomials in a single variable ``L`` over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentL:
    """Finite sum ``sum_e a_e L^e`` stored as ``{e: a_e}`` without zeros."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for e, a in items:
            a = Fraction(a)
            if a:
                acc[int(e)] = acc.get(int(e), Fraction(0)) + a
        self.terms = {e: a for e, a in sorted(acc.items()) if a}

    @classmethod
    def const(cls, c) -> "LaurentL":
        return cls({0: c})

    @classmethod
    def mono(cls, e: int, c=1) -> "LaurentL":
        return cls({e: c})

    @classmethod
    def coerce(cls, x) -> "LaurentL":
        return x if isinstance(x, LaurentL) else cls.const(x)

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentL(0)"
        return "LaurentL(" + " + ".join(f"({a})*L^{e}" for e, a in self.terms.items()) + ")"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{a}*L^{e}" if e else f"{a}" for e, a in self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentL):
            try:
                other = LaurentL.const(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __getitem__(self, e: int) -> Fraction:
        return self.terms.get(e, Fraction(0))

    def items(self):
        return self.terms.items()

    def window(self) -> tuple[int, int] | None:
        """``(minExp, maxExp)``, or ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        es = list(self.terms)
        return es[0], es[-1]

    def __add__(self, other):
        other = LaurentL.coerce(other)
        acc = dict(self.terms)
        for e, a in other.terms.items():
            acc[e] = acc.get(e, Fraction(0)) + a
        return LaurentL(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentL({e: -a for e, a in self.terms.items()})

    def __sub__(self, other):
        return self + (-LaurentL.coerce(other))

    def __rsub__(self, other):
        return LaurentL.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentL):
            c = Fraction(other)
            return LaurentL({e: a * c for e, a in self.terms.items()})
        acc: dict[int, Fraction] = {}
        for e1, a1 in self.terms.items():
            for e2, a2 in other.terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, Fraction(0)) + a1 * a2
        return LaurentL(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LaurentL):
            if len(other.terms) != 1:
                raise ZeroDivisionError("only division by a monomial is exact")
            (e, a), = other.terms.items()
            return LaurentL({k - e: v / a for k, v in self.terms.items()})
        c = Fraction(other)
        return LaurentL({e: a / c for e, a in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ZeroDivisionError("negative powers only for monomials")
            (e, a), = self.terms.items()
            return LaurentL({e * k: a ** k})
        out = LaurentL.const(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentL":
        """Multiply by ``L^k``."""
        return LaurentL({e + k: a for e, a in self.terms.items()})

    def to_json(self) -> dict[str, str]:
        return {str(e): _rat_str(a) for e, a in self.terms.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentL":
        return cls({int(e): Fraction(v) for e, v in data.items()})


def _rat_str(a: Fraction) -> str:
    return f"{a.numerator}/{a.denominator}"
