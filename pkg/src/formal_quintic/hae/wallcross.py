"""Change of variables between stable-quotient and Gromov-Witten series.

``F_GW(Q(q)) = I_0(q)^{2g-2} F_SQ(q)`` with the mirror map ``Q(q)``.
"""

from __future__ import annotations

from ..quintic import build_hypergeometric, mirror_map
from ..ring.series import QSeries

DIRECTIONS = ("SQtoGW", "GWtoSQ")


def inverse_mirror_map(N: int) -> QSeries:
    """``q(Q)``, the compositional inverse of the mirror map."""
    return mirror_map(N).reverse()


def wall_cross(f: QSeries, g: int, direction: str, N: int | None = None) -> QSeries:
    """Transform a genus ``g`` series between the SQ and GW variables."""
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}")
    N = f.precision if N is None else min(N, f.precision)
    f = f.truncate(N)
    i0, _ = build_hypergeometric(N)
    weight = i0 ** (2 * g - 2)
    if direction == "SQtoGW":
        return (weight * f).compose(inverse_mirror_map(N))
    return f.compose(mirror_map(N)) / weight
