"""The semigroup model: Hilbert basis, canonical ideal and their invariants."""

import dataclasses
import logging
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ._exceptions import DimensionMismatch
from ._lattice import (
    IntVector,
    RaySystem,
    barycentric,
    parallelotope_points,
)
from ._options import SemigroupOptions

logger = logging.getLogger(__name__)


# private helpers ======================================================================


def _in_cone(rs: RaySystem, z: Sequence[int]) -> bool:
    return all(n >= 0 for n in rs.scaled_coordinates(z))


def _in_interior(rs: RaySystem, z: Sequence[int]) -> bool:
    return all(n > 0 for n in rs.scaled_coordinates(z))


def _sub(p: Sequence[int], q: Sequence[int]) -> IntVector:
    return tuple(a - b for a, b in zip(p, q))


def _dominates(p: Sequence[int], q: Sequence[int]) -> bool:
    """Whether ``p - q`` lies in N^d."""
    return all(a >= b for a, b in zip(p, q))


def _minimal_generators(rs: RaySystem, points: Sequence[IntVector]) -> list:
    """Hilbert basis from the rays and the nonzero parallelotope points.

    Every basis element is a ray or a nonzero parallelotope point. Candidates
    are visited in increasing order of the sum of their scaled coordinates,
    a grading that is positive on ``H \\ {0}``. A candidate is reducible
    exactly when some basis element found before it can be subtracted while
    staying in ``H``.

    """
    candidates = set(rs.rays) | {p for p in points if any(p)}
    graded = sorted(candidates, key=lambda c: (sum(rs.scaled_coordinates(c)), c))
    basis = []
    for c in graded:
        reducible = any(_dominates(c, b) and _in_cone(rs, _sub(c, b)) for b in basis)
        if not reducible:
            basis.append(c)
    return sorted(basis)


def _omega_generators(
    rs: RaySystem, points: Sequence[IntVector], basis: Sequence[IntVector]
) -> list:
    """Minimal generators of the interior as an ideal of H.

    A minimal generator has all of its barycentric coordinates in (0, 1], since
    otherwise subtracting a ray keeps it interior. These points are exactly the
    reflections ``a_1 + ... + a_d - p`` of the parallelotope points ``p``.

    """
    if rs.dim == 2 and len(basis) > 2:
        # in the plane, the interior generators are the non-ray basis elements
        return [c for c in basis if c not in rs.rays]

    top = rs.ray_sum
    generators = []
    for p in points:
        g = _sub(top, p)
        if not any(_dominates(g, c) and _in_interior(rs, _sub(g, c)) for c in basis):
            generators.append(g)
    return sorted(generators)


# public types =========================================================================


@dataclasses.dataclass(frozen=True)
class SemigroupModel:
    """A normal simplicial semigroup together with its cached invariants.

    Typically a model is not created manually, but by calling :func:`build`.

    Attributes
    ----------
    rays : RaySystem
        The extremal rays.
    hilbert_basis : tuple of IntVector
        The Hilbert basis ``B_H``, sorted lexicographically.
    omega_gens : tuple of IntVector
        The minimal generators ``G(ω_H)`` of the interior ideal, sorted
        lexicographically.
    parallelotope : tuple of IntVector
        The lattice points of the fundamental parallelotope, sorted.
    options : SemigroupOptions
        The budgets used while building the model; later searches reuse them.

    """

    rays: RaySystem
    hilbert_basis: Tuple[IntVector, ...]
    omega_gens: Tuple[IntVector, ...]
    parallelotope: Tuple[IntVector, ...]
    options: SemigroupOptions = dataclasses.field(default_factory=SemigroupOptions)

    def __repr__(self):
        return (
            f"<{self.__class__.__name__} with rays {[list(r) for r in self.rays.rays]}, "
            f"{len(self.hilbert_basis)} basis elements "
            f"and {len(self.omega_gens)} interior generators>"
        )

    @property
    def dim(self) -> int:
        """The ambient dimension."""
        return self.rays.dim

    @property
    def det_abs(self) -> int:
        """The absolute determinant of the rays."""
        return self.rays.det_abs


@dataclasses.dataclass(frozen=True)
class SlimVerdict:
    """The outcome of :func:`is_slim`.

    Attributes
    ----------
    slim : bool
        Whether every basis element outside the interior has coordinate sum at
        least one.
    witness : Optional[IntVector]
        The lexicographically first basis element violating the condition, or
        None if the semigroup is slim.
    witness_sum : Optional[Fraction]
        The barycentric coordinate sum of the witness.

    """

    slim: bool
    witness: Optional[IntVector] = None
    witness_sum: Optional[Fraction] = None


# public functions =====================================================================


def hilbert_basis(rs: RaySystem, options: Optional[SemigroupOptions] = None) -> list:
    """The Hilbert basis of ``H = C ∩ Z^d``.

    The candidates are the rays together with the nonzero lattice points of the
    fundamental parallelotope. A candidate is kept when no other candidate can
    be subtracted from it while staying in ``H``.

    Parameters
    ----------
    rs : RaySystem
        The extremal rays.
    options : Optional[SemigroupOptions]
        The enumeration budgets. If None, defaults are used.

    Returns
    -------
    list of IntVector
        The basis, sorted lexicographically.

    Raises
    ------
    LimitExceeded
        If the parallelotope cannot be enumerated within budget.

    """
    return _minimal_generators(rs, parallelotope_points(rs, options))


def build(
    rays: Sequence[Sequence[int]], options: Optional[SemigroupOptions] = None
) -> SemigroupModel:
    """Build the model of the normal semigroup with the given extremal rays.

    Parameters
    ----------
    rays : Sequence[Sequence[int]]
        ``d`` primitive, linearly independent vectors of N^d.
    options : Optional[SemigroupOptions]
        The enumeration budgets. If None, defaults are used.

    Returns
    -------
    SemigroupModel

    Raises
    ------
    InvalidRays
        If the rays are negative, not primitive or dependent.
    LimitExceeded
        If the parallelotope cannot be enumerated within budget.

    Example
    -------
    >>> model = build([(5, 2), (2, 5)])
    >>> model.hilbert_basis
    ((1, 1), (1, 2), (2, 1), (2, 5), (5, 2))

    """
    if options is None:
        options = SemigroupOptions()

    if isinstance(rays, RaySystem):
        rs = rays
    else:
        rs = RaySystem(rays)

    points = parallelotope_points(rs, options)
    basis = _minimal_generators(rs, points)
    omega = _omega_generators(rs, points, basis)

    logger.debug(
        "built semigroup with rays %s: |P_H| = %d, |B_H| = %d, |G(omega)| = %d",
        rs.rays,
        len(points),
        len(basis),
        len(omega),
    )

    return SemigroupModel(
        rays=rs,
        hilbert_basis=tuple(basis),
        omega_gens=tuple(omega),
        parallelotope=tuple(points),
        options=options,
    )


def contains(m: SemigroupModel, z: Sequence[int]) -> bool:
    """Whether the integer point `z` belongs to the semigroup.

    Raises
    ------
    DimensionMismatch
        If `z` does not have length ``m.dim``.

    """
    return _in_cone(m.rays, z)


def contains_shifted(m: SemigroupModel, base: Sequence[int], z: Sequence[int]) -> bool:
    """Whether `z` belongs to the shifted semigroup ``base + H``."""
    if len(base) != m.dim:
        raise DimensionMismatch(f"Point {tuple(base)} has length {len(base)}, expected {m.dim}.")
    return _in_cone(m.rays, _sub(z, base))


def in_omega(m: SemigroupModel, z: Sequence[int]) -> bool:
    """Whether `z` lies in ``ω_H``, the interior lattice points of the cone."""
    return _in_interior(m.rays, z)


def omega_generators(m: SemigroupModel) -> Tuple[IntVector, ...]:
    """The unique minimal generating set of ``ω_H`` as an ideal of ``H``.

    For a regular semigroup this is the single point ``a_1 + ... + a_d``; in
    the plane, for a non-regular semigroup, it is the Hilbert basis minus the
    two rays.

    """
    return m.omega_gens


def is_slim(m: SemigroupModel) -> SlimVerdict:
    """Decide whether the semigroup is slim.

    A semigroup is slim when every Hilbert basis element outside ``ω_H`` has
    barycentric coordinates summing to at least one. Every planar semigroup is
    slim.

    Returns
    -------
    SlimVerdict
        Carries the lexicographically first violating basis element when the
        semigroup is not slim.

    """
    for c in m.hilbert_basis:
        coords = barycentric(c, m.rays)
        if any(x == 0 for x in coords) and coords.total < 1:
            return SlimVerdict(slim=False, witness=c, witness_sum=coords.total)
    return SlimVerdict(slim=True)


def minimal_omega_elements(m: SemigroupModel) -> list:
    """The elements of ``ω_H`` that are minimal for the componentwise order.

    Every element of ``ω_H`` dominates some generator, so the minimal elements
    are the componentwise-minimal generators.

    """
    gens = m.omega_gens
    return [
        g for g in gens if not any(h != g and _dominates(g, h) for h in gens)
    ]


def bottom_element(m: SemigroupModel) -> Optional[IntVector]:
    """The componentwise least element of ``ω_H``, when it exists.

    The candidate is the componentwise minimum of the generators; it is the
    bottom element exactly when it lies in ``ω_H`` itself. A bottom element
    always exists in the plane.

    """
    meet = tuple(min(col) for col in zip(*m.omega_gens))
    if _in_interior(m.rays, meet):
        return meet
    return None


def is_gorenstein(m: SemigroupModel) -> bool:
    """Whether ``ω_H`` is generated by a single element."""
    return len(m.omega_gens) == 1

