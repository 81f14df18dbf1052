"""Recover polynomials in the generators from their q-series values."""

from __future__ import annotations

from typing import Iterable, Mapping

from ..checks import NotRepresentable
from ..errors import InsufficientPrecision
from ..quintic import l_power
from ..ring.laurent import LaurentL
from ..ring.linalg import Inconsistent, Underdetermined, linsolve
from ..ring.series import QSeries
from .poly import APoly, eval_gen


def gen_recognize(f: QSeries, monomials: Mapping | Iterable, window: tuple | None = None,
                  kind: type = APoly, margin: int = 5):
    """Fit ``f`` by ``sum_m c_m(L) m`` over the given monomials.

    ``monomials`` is either a mapping ``exponent tuple -> (dmin, dmax)`` or an
    iterable of exponent tuples sharing ``window``. The fit uses all but the
    last ``margin`` coefficients; those must agree with the result.
    """
    if not isinstance(monomials, Mapping):
        if window is None:
            raise ValueError("a shared window is required for a monomial list")
        monomials = {tuple(m): tuple(window) for m in monomials}
    N = f.precision
    basis = []
    for mono, (lo, hi) in monomials.items():
        value = eval_gen(kind({tuple(mono): 1}), N)
        for e in range(lo, hi + 1):
            basis.append((tuple(mono), e, value * l_power(e, N)))
    n = len(basis)
    fit = N + 1 - margin
    if fit < n:
        raise InsufficientPrecision(f"{n} unknowns need precision {n + margin - 1}, have {N}")
    A = [[b[2][m] for b in basis] for m in range(fit)]
    sol = linsolve(A, [f[m] for m in range(fit)])
    if isinstance(sol, Inconsistent):
        return NotRepresentable(tuple(monomials), sol.row, "inconsistent fit")
    if isinstance(sol, Underdetermined):
        return NotRepresentable(tuple(monomials), None, "basis is degenerate at this precision")
    terms: dict = {}
    for (mono, e, _), a in zip(basis, sol):
        if a:
            terms[mono] = terms.get(mono, LaurentL()) + LaurentL.mono(e, a)
    result = kind(terms)
    g = eval_gen(result, N)
    for m in range(fit, N + 1):
        if g[m] != f[m]:
            return NotRepresentable(tuple(monomials), m, "verification order mismatch")
    return result

