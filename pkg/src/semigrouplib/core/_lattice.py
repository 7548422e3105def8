"""Exact linear algebra over a basis of extremal rays.

Determinants and adjugates come from python-flint integer matrices.
Coordinates are Python integers or :class:`fractions.Fraction` values, and
floating point is never used.

"""

import dataclasses
import enum
import itertools
import logging
import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

import flint

from ._exceptions import DimensionMismatch, InvalidRays, LimitExceeded, ZeroVector
from ._options import SemigroupOptions

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]
"""A point of Z^d, stored as a tuple of Python integers."""

Rational = Fraction
"""An exact rational number, always kept in lowest terms."""


# private helpers ======================================================================


def _as_vector(v: Iterable[int]) -> IntVector:
    """Convert an iterable of integers into an :data:`IntVector`."""
    coords = tuple(v)
    for c in coords:
        # bool is an int subclass, but True is not a coordinate
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"Coordinates must be integers, got {c!r}.")
    return coords


def _determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix."""
    return int(flint.fmpz_mat([list(row) for row in matrix]).det())


def _adjugate(matrix: Sequence[Sequence[int]], det: int) -> Tuple[IntVector, ...]:
    """The adjugate of a nonsingular integer matrix, so that A·adj(A) = det(A)·I."""
    n = len(matrix)
    inverse = flint.fmpz_mat([list(row) for row in matrix]).inv()
    adjugate = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = inverse[i, j] * det
            # det·A^-1 is integral
            assert entry.q == 1
            row.append(int(entry.p))
        adjugate.append(tuple(row))
    return tuple(adjugate)


# public types =========================================================================


class ConePosition(enum.Enum):
    """Where a point sits relative to the cone spanned by the rays."""

    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclasses.dataclass(frozen=True)
class Barycentric:
    """The coordinates of a point in the basis of extremal rays.

    Attributes
    ----------
    values : tuple of Fraction
        The coefficients ``[z]_1, ..., [z]_d`` such that
        ``sum(values[i] * rays[i]) == z``.

    """

    values: Tuple[Fraction, ...]

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, ix) -> Fraction:
        return self.values[ix]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def total(self) -> Fraction:
        """The sum of the coordinates."""
        return sum(self.values, Fraction(0))

    def reconstruct(self, rs: "RaySystem") -> Tuple[Fraction, ...]:
        """Rebuild the point ``sum(values[i] * rays[i])`` as exact rationals."""
        return tuple(
            sum((lam * ray[j] for lam, ray in zip(self.values, rs.rays)), Fraction(0))
            for j in range(rs.dim)
        )


class RaySystem:
    """The d extremal rays of a normal simplicial semigroup in N^d.

    The semigroup itself is ``H = C ∩ Z^d`` where ``C`` is the cone spanned by
    the rays, so it is normal and full-dimensional by construction.

    Parameters
    ----------
    rays : Sequence[Sequence[int]]
        Exactly ``d >= 2`` integer vectors of length ``d``.

    Attributes
    ----------
    dim : int
        The ambient dimension ``d``.
    rays : tuple of IntVector
        The rays ``a_1, ..., a_d`` in the order given.
    det : int
        The determinant of the matrix whose columns are the rays. Nonzero.

    Raises
    ------
    InvalidRays
        If there are fewer than two rays, if the number of rays is not the
        length of each ray, if a ray has a negative coordinate, if a ray is not
        primitive, or if the rays are linearly dependent.

    Notes
    -----
    Rays are never normalized silently. Use :func:`make_primitive` first if
    the input may contain non-primitive vectors.

    """

    def __init__(self, rays: Sequence[Sequence[int]]):
        try:
            rays = tuple(_as_vector(r) for r in rays)
        except TypeError as exc:
            raise InvalidRays(str(exc)) from exc

        d = len(rays)
        if d < 2:
            raise InvalidRays(f"At least two rays are required, got {d}.")

        for ray in rays:
            if len(ray) != d:
                raise InvalidRays(f"Ray {ray} does not have length {d}.")
            if any(c < 0 for c in ray):
                raise InvalidRays(f"Ray {ray} has a negative coordinate.")
            g = math.gcd(*ray)
            if g == 0:
                raise InvalidRays("The zero vector is not a ray.")
            if g != 1:
                raise InvalidRays(f"Ray {ray} is not primitive (gcd {g}).")

        # columns of the matrix are the rays
        matrix = [[ray[row] for ray in rays] for row in range(d)]
        det = _determinant(matrix)
        if det == 0:
            raise InvalidRays(f"Rays {list(rays)} are linearly dependent.")

        self.dim = d
        self.rays = rays
        self.det = det

        # scaled so that the denominator of every coordinate is |det|
        sign = 1 if det > 0 else -1
        self._adjugate = tuple(
            tuple(sign * x for x in row) for row in _adjugate(matrix, det)
        )

    def __repr__(self):
        return f"RaySystem(rays={[list(r) for r in self.rays]!r})"

    def __eq__(self, other):
        if not isinstance(other, RaySystem):
            return NotImplemented
        return self.rays == other.rays

    def __hash__(self):
        return hash(self.rays)

    @property
    def det_abs(self) -> int:
        """The absolute value of the determinant; the index of the ray lattice."""
        return abs(self.det)

    @property
    def ray_sum(self) -> IntVector:
        """The vector ``a_1 + ... + a_d``."""
        return tuple(sum(col) for col in zip(*self.rays))

    def scaled_coordinates(self, z: Sequence[int]) -> IntVector:
        """The barycentric coordinates of `z`, each multiplied by ``|det|``.

        These are integers; the barycentric coordinates are obtained by
        dividing them by :attr:`det_abs`. All position tests in the package
        are performed on these integers.

        Raises
        ------
        DimensionMismatch
            If `z` does not have length :attr:`dim`.

        """
        if len(z) != self.dim:
            raise DimensionMismatch(
                f"Point {tuple(z)} has length {len(z)}, expected {self.dim}."
            )
        return tuple(sum(a * c for a, c in zip(row, z)) for row in self._adjugate)


# public functions =====================================================================


def make_primitive(v: Sequence[int]) -> IntVector:
    """Divide a nonzero integer vector by the gcd of its coordinates.

    Parameters
    ----------
    v : Sequence[int]
        The vector to normalize.

    Returns
    -------
    IntVector
        The primitive vector on the same ray.

    Raises
    ------
    ZeroVector
        If every coordinate of `v` is zero.

    Example
    -------
    >>> make_primitive((4, 6))
    (2, 3)

    """
    coords = _as_vector(v)
    g = math.gcd(*coords)
    if g == 0:
        raise ZeroVector("The zero vector has no primitive representative.")
    return tuple(c // g for c in coords)


def barycentric(z: Sequence[int], rs: RaySystem) -> Barycentric:
    """Solve ``sum(lambda_i * a_i) == z`` exactly by Cramer's rule.

    Parameters
    ----------
    z : Sequence[int]
        A point of Z^d.
    rs : RaySystem
        The basis of rays.

    Returns
    -------
    Barycentric
        The exact rational coordinates of `z`.

    Raises
    ------
    DimensionMismatch
        If `z` does not have length ``rs.dim``.

    """
    scaled = rs.scaled_coordinates(z)
    return Barycentric(tuple(Fraction(n, rs.det_abs) for n in scaled))


def cone_position(z: Sequence[int], rs: RaySystem) -> ConePosition:
    """Classify `z` as interior to, on the boundary of, or outside the cone.

    The point is interior when all of its barycentric coordinates are
    positive, on the boundary when they are all nonnegative and at least one
    is zero, and outside otherwise.

    """
    scaled = rs.scaled_coordinates(z)
    if all(n > 0 for n in scaled):
        return ConePosition.INTERIOR
    if all(n >= 0 for n in scaled):
        return ConePosition.BOUNDARY
    return ConePosition.OUTSIDE


def in_parallelotope(z: Sequence[int], rs: RaySystem) -> bool:
    """Whether ``0 <= [z]_i < 1`` for every i."""
    m = rs.det_abs
    return all(0 <= n < m for n in rs.scaled_coordinates(z))


def _last_coordinate_range(rs: RaySystem, prefix: Sequence[int], upper: int) -> range:
    """The values ``t`` in ``[0, upper]`` with ``prefix + (t,)`` in the parallelotope.

    Each scaled coordinate is affine in ``t``, so every constraint
    ``0 <= n_i < |det|`` cuts out an interval.

    """
    m = rs.det_abs
    low, high = 0, upper
    for row in rs._adjugate:
        pre = sum(a * z for a, z in zip(row, prefix))
        c = row[-1]
        if c == 0:
            if not 0 <= pre < m:
                return range(0)
        elif c > 0:
            low = max(low, -(pre // c))
            high = min(high, (m - 1 - pre) // c)
        else:
            low = max(low, -((pre - m + 1) // c))
            high = min(high, (-pre) // c)
    return range(low, high + 1)


def parallelotope_points(
    rs: RaySystem, options: Optional[SemigroupOptions] = None
) -> list:
    """All lattice points of the fundamental parallelotope.

    The integer box ``[0, a_1 + ... + a_d]`` is scanned coordinate by
    coordinate. Along the last coordinate the points satisfying
    :func:`in_parallelotope` form an interval, which is solved exactly instead
    of being tested point by point. The result always contains the origin and
    has exactly ``|det|`` elements.

    Parameters
    ----------
    rs : RaySystem
        The basis of rays.
    options : Optional[SemigroupOptions]
        Supplies the enumeration and box budgets. If None, defaults are used.

    Returns
    -------
    list of IntVector
        The points, sorted lexicographically.

    Raises
    ------
    LimitExceeded
        If ``|det|`` exceeds the enumeration budget, or if the box is larger
        than the box budget.

    """
    if options is None:
        options = SemigroupOptions()

    if rs.det_abs > options.enumeration_budget:
        raise LimitExceeded("The fundamental parallelotope", rs.det_abs, options.enumeration_budget)

    upper = rs.ray_sum
    box_size = math.prod(u + 1 for u in upper)
    if box_size > options.box_budget:
        raise LimitExceeded("The parallelotope bounding box", box_size, options.box_budget)

    logger.debug("scanning %d box points for %d parallelotope points", box_size, rs.det_abs)

    points = []
    for prefix in itertools.product(*(range(u + 1) for u in upper[:-1])):
        for t in _last_coordinate_range(rs, prefix, upper[-1]):
            points.append(prefix + (t,))
    return points
