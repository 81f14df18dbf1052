"""Exact arithmetic substrate: series, Q[H]/(H^5-1), Laurent objects, solving."""

from .hclass import (HClass, ZLaurent, ZRatFn, hclass_invert,
                     root_elementary_symmetric, zratfn_expand)
from .laurent import LaurentL
from .linalg import Inconsistent, Underdetermined, linsolve
from .series import (QSeries, binomial_series, dop, series_arith,
                     series_compose, series_exp_log, series_reverse)

__all__ = [
    "HClass", "ZLaurent", "ZRatFn", "hclass_invert", "root_elementary_symmetric",
    "zratfn_expand", "LaurentL", "Inconsistent", "Underdetermined", "linsolve",
    "QSeries", "binomial_series", "dop", "series_arith", "series_compose",
    "series_exp_log", "series_reverse",
]
