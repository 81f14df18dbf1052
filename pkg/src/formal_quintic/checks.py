"""Shared reporting for verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IdentityViolation
from .ring.series import QSeries


@dataclass
class CheckReport:
    name: str
    verified_order: int
    details: dict = field(default_factory=dict)
    passed: bool = True

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed,
                "verified_order": self.verified_order, **self.details}


@dataclass(frozen=True)
class NotRepresentable:
    """Recognition failed; ``order`` is the first disagreeing coefficient."""
    window: tuple
    order: int | None
    reason: str = ""

    def __bool__(self) -> bool:
        return False


def assert_series_equal(identity: str, lhs: QSeries, rhs: QSeries,
                        order: int | None = None, **locus) -> int:
    """Raise :class:`IdentityViolation` at the first differing coefficient.

    Returns the order to which the identity was verified.
    """
    n = min(lhs.precision, rhs.precision)
    if order is not None:
        n = min(n, order)
    for k in range(n + 1):
        if lhs[k] != rhs[k]:
            raise IdentityViolation(identity, {**locus, "q": k},
                                    f"lhs={lhs[k]} rhs={rhs[k]}")
    return n
