"""Ulrich elements and almost Gorenstein tests for semigroups in the plane."""

from ._oriented import OrientedModel, orient, cross
from .hstar import (
    HStarSet,
    h_star,
    h_star_count,
    is_ag,
    ulrich_one_one,
    h1_star_recursive,
)
from .ulrich import (
    ALL_PAIRS_COVERED,
    UlrichVerdict,
    SearchKind,
    SearchResult,
    QuickFilters,
    is_ulrich,
    is_ulrich_bottom,
    quick_filters,
    find_ulrich,
)

__all__ = [
    "OrientedModel",
    "orient",
    "cross",
    "HStarSet",
    "h_star",
    "h_star_count",
    "is_ag",
    "ulrich_one_one",
    "h1_star_recursive",
    "ALL_PAIRS_COVERED",
    "UlrichVerdict",
    "SearchKind",
    "SearchResult",
    "QuickFilters",
    "is_ulrich",
    "is_ulrich_bottom",
    "quick_filters",
    "find_ulrich",
]
