"""Ulrich elements of planar semigroups.

An interior element ``b`` is Ulrich when every sum ``p + q`` of a Hilbert basis
element ``p`` and an interior generator ``q`` lies in ``b + H`` or in one of
the ray shifts ``a_1 + H``, ``a_2 + H``. A semigroup with an Ulrich element is
almost Gorenstein.

"""

import dataclasses
import enum
import itertools
import logging
import math
from typing import Optional, Tuple, Union

from ..core import (
    IntVector,
    LimitExceeded,
    NotInOmega,
    contains_shifted,
    in_omega,
    in_parallelotope,
)
from ._oriented import OrientedModel
from .hstar import is_ag

logger = logging.getLogger(__name__)

ALL_PAIRS_COVERED = "all-pairs-covered"
"""The certificate carried by an Ulrich verdict that found no violating pair."""


# public types =========================================================================


@dataclasses.dataclass(frozen=True)
class UlrichVerdict:
    """The outcome of :func:`is_ulrich`.

    Attributes
    ----------
    element : IntVector
        The element that was tested.
    ulrich : bool
        Whether it is Ulrich.
    certificate : Union[Tuple[IntVector, IntVector], str]
        The first pair ``(p, q)`` whose sum escapes all three shifts, or
        :data:`ALL_PAIRS_COVERED`.
    basis_pairs : Optional[bool]
        When the element is itself a Hilbert basis element, the answer of the
        test that ranges over pairs of basis elements instead. None otherwise.

    """

    element: IntVector
    ulrich: bool
    certificate: Union[Tuple[IntVector, IntVector], str]
    basis_pairs: Optional[bool] = None


class SearchKind(enum.Enum):
    ALL_OF_OMEGA = "AllOfOmega"
    FINITE_SET = "FiniteSet"


@dataclasses.dataclass(frozen=True)
class SearchResult:
    """Every Ulrich element of a planar semigroup.

    Attributes
    ----------
    kind : SearchKind
        ``ALL_OF_OMEGA`` when every interior element is Ulrich, and
        ``FINITE_SET`` otherwise.
    elements : tuple of IntVector
        The Ulrich elements, sorted. Empty when the kind is ``ALL_OF_OMEGA``.

    """

    kind: SearchKind
    elements: Tuple[IntVector, ...] = ()

    @property
    def found(self) -> bool:
        """Whether at least one Ulrich element exists."""
        return self.kind is SearchKind.ALL_OF_OMEGA or bool(self.elements)


@dataclasses.dataclass(frozen=True)
class QuickFilters:
    """Sufficient conditions that settle Ulrich questions without a search.

    Attributes
    ----------
    only_candidate_is_ones : bool
        Every ray coordinate is positive and ``(1, 1)`` is interior, so
        ``(1, 1)`` is the bottom element and the only candidate that needs
        a residue test.
    only_candidate_is_bottom : bool
        Twice the bottom element lies in the fundamental parallelogram; then
        no other basis element is Ulrich.
    bottom_forced_ulrich : bool
        ``(x_2, y_1)`` is below the bottom element, which makes the bottom
        element Ulrich.
    all_basis_elements_ulrich : bool
        No sum of two basis elements from the fundamental parallelogram stays
        in it; then every non-ray basis element is Ulrich.

    """

    only_candidate_is_ones: bool
    only_candidate_is_bottom: bool
    bottom_forced_ulrich: bool
    all_basis_elements_ulrich: bool


# private helpers ======================================================================


def _add(p, q) -> IntVector:
    return (p[0] + q[0], p[1] + q[1])


def _ray_shifted(om: OrientedModel, z) -> bool:
    m = om.base
    return contains_shifted(m, om.a1, z) or contains_shifted(m, om.a2, z)


def _first_uncovered(om: OrientedModel, b, lefts, rights):
    for p in lefts:
        for q in rights:
            s = _add(p, q)
            if not (contains_shifted(om.base, b, s) or _ray_shifted(om, s)):
                return (p, q)
    return None


def _uncovered_sums(om: OrientedModel) -> list:
    sums = {
        _add(p, q)
        for p in om.base.hilbert_basis
        for q in om.base.omega_gens
    }
    return sorted(s for s in sums if not _ray_shifted(om, s))


# public functions =====================================================================


def is_ulrich(om: OrientedModel, b) -> UlrichVerdict:
    """Decide whether the interior element `b` is Ulrich.

    Every sum of a basis element and an interior generator must lie in
    ``b + H``, ``a_1 + H`` or ``a_2 + H``. When `b` is a basis element the
    same question is also asked over pairs of basis elements, and the answer
    is recorded in :attr:`UlrichVerdict.basis_pairs`.

    Raises
    ------
    NotInOmega
        If `b` is not in the interior of the cone.

    Example
    -------
    >>> from semigrouplib import build
    >>> from semigrouplib.planar import orient
    >>> om = orient(build([(11, 13), (3, 4)]))
    >>> is_ulrich(om, (5, 6)).ulrich
    True
    >>> is_ulrich(om, (4, 5)).certificate
    ((5, 6), (5, 6))

    """
    b = tuple(b)
    if not in_omega(om.base, b):
        raise NotInOmega(f"The element {b} is not in the interior of the cone.")

    basis = om.base.hilbert_basis
    violation = _first_uncovered(om, b, basis, om.base.omega_gens)

    basis_pairs = None
    if b in basis:
        basis_pairs = _first_uncovered(om, b, basis, basis) is None

    if violation is None:
        return UlrichVerdict(b, True, ALL_PAIRS_COVERED, basis_pairs)
    return UlrichVerdict(b, False, violation, basis_pairs)


def is_ulrich_bottom(om: OrientedModel) -> bool:
    """Whether the bottom element is Ulrich.

    This holds exactly when both ``H_1^*`` and ``H_2^*`` are free of sums of
    their own points.

    """
    return is_ag(om, 1) and is_ag(om, 2)


def quick_filters(om: OrientedModel) -> QuickFilters:
    """Evaluate each sufficient condition literally on the model."""
    rs = om.base.rays
    positive = all(c > 0 for ray in rs.rays for c in ray)
    ones = positive and in_omega(om.base, (1, 1))

    twice_bottom = (2 * om.u, 2 * om.v)
    forced = om.x2 <= om.u and om.y1 <= om.v

    inside = [c for c in om.base.hilbert_basis if in_parallelotope(c, rs)]
    closed = all(
        not in_parallelotope(_add(c, d), rs)
        for c, d in itertools.combinations_with_replacement(inside, 2)
    )

    return QuickFilters(
        only_candidate_is_ones=ones,
        only_candidate_is_bottom=in_parallelotope(twice_bottom, rs),
        bottom_forced_ulrich=forced,
        all_basis_elements_ulrich=closed,
    )


def find_ulrich(om: OrientedModel) -> SearchResult:
    """Find every Ulrich element of the semigroup.

    Collect the sums ``p + q`` of a basis element and an interior generator
    that lie in neither ray shift. If there are none, every interior element
    passes the test. Otherwise an Ulrich element ``b`` must satisfy
    ``s - b`` in ``H`` for each such sum ``s``, so ``b`` lies below their
    componentwise minimum. Only the interior points of that box which divide
    every uncovered sum are tested.

    Returns
    -------
    SearchResult

    Raises
    ------
    LimitExceeded
        If the candidate box exceeds the box budget.

    """
    uncovered = _uncovered_sums(om)
    if not uncovered:
        logger.debug("every pair sum of %r is ray-shifted", om.base)
        return SearchResult(SearchKind.ALL_OF_OMEGA)

    meet = tuple(min(col) for col in zip(*uncovered))
    box_size = math.prod(meet)
    budget = om.base.options.box_budget
    if box_size > budget:
        raise LimitExceeded("The Ulrich candidate box", box_size, budget)

    found = []
    for b in itertools.product(*(range(1, c + 1) for c in meet)):
        if not in_omega(om.base, b):
            continue
        if not all(contains_shifted(om.base, b, s) for s in uncovered):
            continue
        if is_ulrich(om, b).ulrich:
            found.append(b)

    logger.debug("%d uncovered sums, %d Ulrich elements below %s", len(uncovered), len(found), meet)
    return SearchResult(SearchKind.FINITE_SET, tuple(sorted(found)))
