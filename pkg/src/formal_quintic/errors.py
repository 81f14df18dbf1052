"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class QuinticError(Exception):
    """Base class for all errors raised by ``formal_quintic``."""


# ring-core -------------------------------------------------------------

class DivisionByNonUnit(QuinticError, ZeroDivisionError):
    pass


class CompositionRequiresZeroConstant(QuinticError, ValueError):
    pass


class NotReversible(QuinticError, ValueError):
    pass


class BadConstantTerm(QuinticError, ValueError):
    pass


class NonUnit(QuinticError, ZeroDivisionError):
    pass


class NonUnitLeadingCoefficient(QuinticError, ZeroDivisionError):
    pass


# verification ----------------------------------------------------------

class IdentityViolation(QuinticError, AssertionError):
    """An identity that must hold coefficientwise failed.

    ``locus`` records where the first mismatch was found, e.g. ``{"q": 3}``
    or ``{"d": 2, "z": -1}``.
    """

    def __init__(self, identity: str, locus: dict, detail: str = ""):
        self.identity = identity
        self.locus = dict(locus)
        self.detail = detail
        where = ", ".join(f"{k}={v}" for k, v in self.locus.items())
        msg = f"{identity} fails at {where}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class ResidualSingularity(IdentityViolation):
    pass


class BoundViolation(QuinticError, AssertionError):
    pass


class NonUnitNormalization(QuinticError, ZeroDivisionError):
    pass


class InsufficientPrecision(QuinticError, ValueError):
    pass


# hae-engine ------------------------------------------------------------

class K2DegreeViolation(QuinticError, AssertionError):
    pass


class NotIntegrable(QuinticError, ValueError):
    pass


class MissingLowerGenus(QuinticError, ValueError):
    pass


class MissingConstants(QuinticError, ValueError):
    def __init__(self, genera):
        self.genera = sorted(genera)
        super().__init__(
            "constants of integration required for genus "
            + ", ".join(str(g) for g in self.genera))


class UnknownSeries(QuinticError, KeyError):
    pass
