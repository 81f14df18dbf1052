"""Exact linear solving over the rationals by fraction-free elimination."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence


@dataclass(frozen=True)
class Inconsistent:
    """The system has no solution; ``row`` is the first contradictory row."""
    row: int


@dataclass(frozen=True)
class Underdetermined:
    """Rank-deficient but consistent; ``particular`` has free variables at 0."""
    rank: int
    free: tuple
    particular: tuple


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    m = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    return [int(Fraction(x) * m) for x in row]


def linsolve(A: Sequence[Sequence], b: Sequence):
    """Solve ``A x = b`` exactly.

    Returns a tuple of ``Fraction`` when the solution is unique, otherwise an
    :class:`Inconsistent` or :class:`Underdetermined` value. ``A`` may be
    rectangular; extra rows act as consistency checks.
    """
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    if len(b) != nrows:
        raise ValueError("b has the wrong length")
    # augmented integer matrix, one row scaled per equation
    M = [_integer_row(list(A[i]) + [b[i]]) for i in range(nrows)]
    rows = [i for i in range(nrows)]
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        rows[r], rows[piv] = rows[piv], rows[r]
        p = M[r][c]
        for i in range(r + 1, nrows):
            # Bareiss step: exact division by the previous pivot
            mi = M[i][c]
            Mi = M[i]
            Mr = M[r]
            M[i] = [(p * Mi[j] - mi * Mr[j]) // prev for j in range(ncols + 1)]
        prev = p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if M[i][ncols] != 0:
            return Inconsistent(rows[i])
    # back substitution
    x = [Fraction(0)] * ncols
    for i in reversed(range(r)):
        c = pivots[i]
        s = Fraction(M[i][ncols])
        for j in range(c + 1, ncols):
            if M[i][j]:
                s -= M[i][j] * x[j]
        x[c] = s / M[i][c]
    if r < ncols:
        free = tuple(c for c in range(ncols) if c not in pivots)
        return Underdetermined(r, free, tuple(x))
    return tuple(x)
