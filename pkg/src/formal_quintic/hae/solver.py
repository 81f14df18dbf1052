"""Holomorphic anomaly solver for the formal quintic.

Free energies are carried in the ``C0``-normalized form
``G_g = C0^{2-2g} F_g``, a polynomial in ``A2, A4, A6`` over ``Q[L, 1/L]``.
With ``Delta_h = C0^{2-2h} C1 dF_h/dT`` the first anomaly equation reads

    dG/dA2 - (K2/5) dG/dA4 + (K2^2/50) dG/dA6
        = 1/2 sum_{i=1}^{g-1} Delta_{g-i} Delta_i + 1/2 Delta2_{g-1}

where ``Delta2_h = C0^{2-2h} C1^2 d^2F_h/dT^2``. Matching powers of ``K2``
gives the three partial derivatives, which are integrated up to a
constant of integration in ``Q[L, 1/L]``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from ..checks import CheckReport, assert_series_equal
from ..errors import (BoundViolation, K2DegreeViolation, MissingConstants,
                      MissingLowerGenus, NotIntegrable)
from ..quintic import build_series
from ..ring.laurent import LaurentL
from ..ring.series import QSeries
from .poly import APoly, GenPoly, eval_gen, gen_D, to_a, to_x

K2, A2, A4, A6 = 0, 1, 2, 3


def constant_window(g: int) -> tuple[int, int]:
    """L-degree window ``[15 - 15g, 10g - 10]`` for genus ``g``."""
    return (15 - 15 * g, 10 * g - 10)


@dataclass
class FreeEnergy:
    genus: int
    body: APoly
    window: tuple[int, int]
    constant: LaurentL | None = None
    provenance: dict = field(default_factory=dict)
    bound_violations: list = field(default_factory=list)

    @property
    def constant_known(self) -> bool:
        return self.constant is not None

    def full(self) -> APoly:
        """Body plus constant of integration (requires the constant)."""
        if self.constant is None:
            raise MissingConstants([self.genus])
        return self.body + APoly.const(self.constant)

    def with_constant(self, c: LaurentL, source: str = "supplied") -> "FreeEnergy":
        w = c.window()
        if w is not None and (w[0] < self.window[0] or w[1] > self.window[1]):
            raise BoundViolation(
                f"genus {self.genus} constant has L-degrees {w}, outside {self.window}")
        prov = dict(self.provenance, constant=source)
        return FreeEnergy(self.genus, self.body, self.window, c, prov,
                          list(self.bound_violations))

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "body": self.body.to_json(),
            "window": list(self.window),
            "constant": self.constant.to_json() if self.constant is not None else "unknown",
            "provenance": self.provenance,
            "bound_violations": self.bound_violations,
        }


def genus1_variant(a2=Fraction(5, 2), k2=Fraction(19, 24)) -> APoly:
    """``L^5 (a2 A2 + k2 K2 + 1/12) - 19/120`` for chosen ``A2``, ``K2`` coefficients."""
    L5 = LaurentL.mono(5)
    return (APoly.var(A2) * (L5 * a2) + APoly.var(K2) * (L5 * k2)
            + APoly.const(L5 * Fraction(1, 12) - Fraction(19, 120)))


def genus1_phi_printed() -> APoly:
    """The printed genus-one input, ``L^5 (A2/2 + 19 K2/24 + 1/12) - 19/120``.

    With this input the genus-two partials fail integrability by
    ``-95/12 L^10`` (see :func:`integrability_defect`).
    """
    return genus1_variant(Fraction(1, 2), Fraction(19, 24))


def genus1_phi() -> APoly:
    """``C1 dF_1/dT = L^5 (5 A2/2 + 19 K2/24 + 1/12) - 19/120``.

    The ``A2`` coefficient is ``5/2``, the value forced by integrability of
    the genus-two equation given the ``K2`` coefficient; it corresponds to the
    term ``-1/2 log C1`` in ``F_1``.
    """
    return genus1_variant(Fraction(5, 2), Fraction(19, 24))


def t_derivative_data(G: APoly, g: int) -> APoly:
    """``C0^{2-2g} C1 dF_g/dT`` for ``F_g = C0^{2g-2} G``."""
    x = to_x(G)
    return to_a(GenPoly.var(0) * x * (2 * g - 2) + gen_D(x))


def second_t_derivative_data(delta: APoly, g: int) -> APoly:
    """``C0^{2-2g} C1^2 d^2F_g/dT^2`` from ``delta = C0^{2-2g} C1 dF_g/dT``."""
    x = to_x(delta)
    X, Y = GenPoly.var(0), GenPoly.var(3)
    return to_a(X * x * (2 * g - 2) + gen_D(x) - Y * x)


def _deltas(g: int, lower: Mapping[int, APoly], phi: APoly | None) -> dict[int, APoly]:
    out = {1: genus1_phi() if phi is None else phi}
    for h in range(2, g):
        if h not in lower:
            raise MissingLowerGenus(f"genus {h} free energy is required")
        out[h] = t_derivative_data(lower[h], h)
    return out


def hae_rhs(g: int, lower: Mapping[int, APoly] | None = None,
            phi: APoly | None = None) -> APoly:
    """Normalized right side ``C0^{4-2g} C1^2 x RHS`` as an APoly.

    ``lower`` maps each genus ``2 <= h < g`` to its full ``G_h`` (body plus
    constant of integration). ``phi`` replaces the genus-one input
    ``C1 dF_1/dT`` (default :func:`genus1_phi`).
    """
    if g < 2:
        raise ValueError("the anomaly equation is stated for g >= 2")
    deltas = _deltas(g, lower or {}, phi)
    rhs = APoly()
    for i in range(1, g):
        rhs = rhs + deltas[g - i] * deltas[i]
    rhs = rhs + second_t_derivative_data(deltas[g - 1], g - 1)
    return rhs / 2


def solve_partials(rhs: APoly) -> tuple[APoly, APoly, APoly]:
    """Read off ``(dG/dA2, dG/dA4, dG/dA6)`` from the K2-expansion of ``rhs``."""
    deg = rhs.degree_in(K2)
    if deg > 2:
        raise K2DegreeViolation(f"right side has K2-degree {deg}")
    p2 = rhs.coefficient_in(K2, 0)
    p4 = rhs.coefficient_in(K2, 1) * -5
    p6 = rhs.coefficient_in(K2, 2) * 50
    return p2, p4, p6


def _integrate(p: APoly, var: int) -> APoly:
    out = {}
    for m, c in p.terms.items():
        mm = list(m)
        mm[var] += 1
        out[tuple(mm)] = c / mm[var]
    return APoly(out)


def integrate_partials(p2: APoly, p4: APoly, p6: APoly, g: int) -> FreeEnergy:
    """The K2-free ``G`` with the given A-partials and zero constant part."""
    for p, name in ((p2, "P2"), (p4, "P4"), (p6, "P6")):
        if p.degree_in(K2) > 0:
            raise NotIntegrable(f"{name} depends on K2")
    pairs = (((p2, A4), (p4, A2)), ((p2, A6), (p6, A2)), ((p4, A6), (p6, A4)))
    for (a, va), (b, vb) in pairs:
        if a.partial(va) != b.partial(vb):
            raise NotIntegrable(
                f"mixed partials disagree: d/d{APoly.VARS[va]} vs d/d{APoly.VARS[vb]}")
    G = _integrate(p2, A2)
    G = G + _integrate(p4 - G.partial(A4), A4)
    G = G + _integrate(p6 - G.partial(A6), A6)
    window = constant_window(g)
    violations = []
    for m, c in G.terms.items():
        lo, hi = c.window()
        if lo < window[0] or hi > window[1]:
            violations.append({"monomial": list(m), "degrees": [lo, hi]})
    if violations:
        warnings.warn(f"genus {g}: {len(violations)} monomials outside L-window {window}",
                      stacklevel=2)
    return FreeEnergy(g, G, window, None, {"constant": "unknown"}, violations)


def reconstruct(g: int, constants: Mapping[int, LaurentL] | None = None,
                lower: Mapping[int, FreeEnergy] | None = None,
                phi: APoly | None = None) -> FreeEnergy:
    """Reconstruct ``G_g`` from the anomaly equations.

    Lower genera ``2 <= h < g`` are reconstructed recursively unless given in
    ``lower``; their constants of integration must be in ``constants``.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    constants = dict(constants or {})
    missing = [h for h in range(2, g) if h not in constants
               and not (lower and h in lower and lower[h].constant_known)]
    if missing:
        raise MissingConstants(missing)
    solved: dict[int, FreeEnergy] = dict(lower or {})
    full: dict[int, APoly] = {}
    for h in range(2, g):
        if h not in solved:
            solved[h] = reconstruct(h, constants, solved, phi)
        fe = solved[h]
        if not fe.constant_known:
            fe = fe.with_constant(constants[h])
            solved[h] = fe
        full[h] = fe.full()
    rhs = hae_rhs(g, full, phi)
    fe = integrate_partials(*solve_partials(rhs), g)
    fe.provenance["genus1"] = "default" if phi is None else "supplied"
    fe.provenance["lower_constants"] = {
        str(h): solved[h].provenance.get("constant", "unknown") for h in range(2, g)}
    if g in constants:
        fe = fe.with_constant(constants[g])
    return fe


def hae_qseries_check(g: int, N: int, free_energy: FreeEnergy | None = None,
                      constants: Mapping[int, LaurentL] | None = None,
                      partials: tuple | None = None,
                      phi: APoly | None = None) -> CheckReport:
    """Both sides of the first anomaly equation as q-series.

    The right side is assembled from series only: ``dF/dT = D(F)/C1`` with
    ``F_h = C0^{2h-2} G_h``, and genus one from ``phi / C1``.
    """
    s = build_series(N)
    constants = dict(constants or {})
    fe = free_energy or reconstruct(g, constants, phi=phi)
    p2, p4, p6 = partials or (fe.body.partial(A2), fe.body.partial(A4), fe.body.partial(A6))
    k2 = s.k2
    lhs = eval_gen(p2, N) - k2 * eval_gen(p4, N) / 5 + k2 * k2 * eval_gen(p6, N) / 50

    c0, c1 = s.c0, s.c1
    inv_c1 = c1.inverse()
    phi = genus1_phi() if phi is None else phi
    dT: dict[int, QSeries] = {1: eval_gen(phi, N) * inv_c1}
    for h in range(2, g):
        F = c0 ** (2 * h - 2) * eval_gen(reconstruct(h, constants, phi=phi).full(), N)
        dT[h] = F.dop() * inv_c1
    rhs = QSeries.zero(N)
    for i in range(1, g):
        rhs = rhs + dT[g - i] * dT[i]
    rhs = (rhs + dT[g - 1].dop() * inv_c1) / 2
    normalized = rhs * c0 ** (4 - 2 * g) * c1 * c1
    order = assert_series_equal(f"HAE genus {g}", lhs, normalized, genus=g)
    return CheckReport("hae-qseries", order,
                       {"genus": g, "k2_free": fe.body.degree_in(K2) <= 0})


def integrability_defect(rhs: APoly) -> APoly:
    """``dP2/dA4 - dP4/dA2`` for the partials read off from ``rhs``."""
    p2, p4, _ = solve_partials(rhs)
    return p2.partial(A4) - p4.partial(A2)

