"""Slow reference implementations for cross-checking the fast paths.

Nothing in this module uses barycentric coordinates. Membership in a cone is
decided by the signs of determinants, computed by cofactor expansion, so a
defect in :mod:`semigrouplib.core` cannot hide itself here.

"""

import collections
import itertools
from typing import Iterable, Sequence

from .core import IntVector
from .planar import OrientedModel


# private helpers ======================================================================


def _det(matrix) -> int:
    if len(matrix) == 1:
        return matrix[0][0]
    total = 0
    for j, x in enumerate(matrix[0]):
        if x:
            minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
            total += (-1) ** j * x * _det(minor)
    return total


def _signs(rays: Sequence[IntVector], z) -> list:
    """Signs of the Cramer numerators of `z`, normalized by the sign of det."""
    rays = [list(r) for r in rays]
    base = _det(rays)
    orientation = 1 if base > 0 else -1
    signs = []
    for i in range(len(rays)):
        replaced = rays[:i] + [list(z)] + rays[i + 1 :]
        value = orientation * _det(replaced)
        signs.append((value > 0) - (value < 0))
    return signs


def _in_closed_cone(rays, z) -> bool:
    return all(s >= 0 for s in _signs(rays, z))


def _in_open_cone(rays, z) -> bool:
    return all(s > 0 for s in _signs(rays, z))


def _sub(p, q) -> IntVector:
    return tuple(a - b for a, b in zip(p, q))


def _add(p, q) -> IntVector:
    return tuple(a + b for a, b in zip(p, q))


def _box(upper) -> Iterable[IntVector]:
    return itertools.product(*(range(u + 1) for u in upper))


# public functions =====================================================================


def h_star_brute(bottom, ray) -> set:
    """Integer points strictly inside the parallelogram on `bottom` and `ray`.

    Scans the box ``[0, bottom + ray]`` and keeps the points on the open side
    of all four edges.

    Example
    -------
    >>> sorted(h_star_brute((4, 5), (11, 13)))
    [(5, 6), (10, 12)]

    """
    pair = [tuple(bottom), tuple(ray)]
    found = set()
    for z in _box(_add(bottom, ray)):
        far = _sub(_add(bottom, ray), z)
        if _in_open_cone(pair, z) and _in_open_cone(pair, far):
            found.add(z)
    return found


def cone_points_brute(rays, bound) -> set:
    """Lattice points of the closed cone inside the box ``[0, bound]``."""
    return {z for z in _box(bound) if _in_closed_cone(rays, z)}


def parallelotope_points_brute(rays) -> list:
    """Lattice points ``z`` of the half-open parallelotope, sorted.

    A point belongs when it lies in the closed cone and the reflected point
    ``a_1 + ... + a_d - z`` lies in the open cone.

    """
    top = tuple(sum(col) for col in zip(*rays))
    return sorted(
        z for z in _box(top) if _in_closed_cone(rays, z) and _in_open_cone(rays, _sub(top, z))
    )


def closure_generates(basis, targets, bound) -> bool:
    """Whether every target is a sum of basis elements without leaving the box.

    The sums are explored breadth-first from the origin; any partial sum
    outside ``[0, bound]`` is discarded.

    """
    bound = tuple(bound)
    origin = tuple(0 for _ in bound)
    reached = {origin}
    queue = collections.deque([origin])
    while queue:
        z = queue.popleft()
        for c in basis:
            s = _add(z, c)
            if s not in reached and all(x <= b for x, b in zip(s, bound)):
                reached.add(s)
                queue.append(s)
    return all(tuple(t) in reached for t in targets)


def ulrich_pairwise_brute(om: OrientedModel, b) -> bool:
    """Whether every sum of two basis elements lies in ``b + H`` or a ray shift.

    This is the pairwise form of the Ulrich test for a basis element `b`.

    """
    rays = [om.a1, om.a2]
    basis = om.base.hilbert_basis
    shifts = [tuple(b), om.a1, om.a2]
    for p in basis:
        for q in basis:
            s = _add(p, q)
            if not any(_in_closed_cone(rays, _sub(s, t)) for t in shifts):
                return False
    return True


def omega_generators_brute(rays, basis) -> list:
    """Minimal interior generators found by scanning ``[1, a_1 + ... + a_d]``.

    An interior point is a generator when subtracting any basis element
    leaves the interior.

    """
    top = tuple(sum(col) for col in zip(*rays))
    generators = []
    for z in itertools.product(*(range(1, t + 1) for t in top)):
        if not _in_open_cone(rays, z):
            continue
        if any(_in_open_cone(rays, _sub(z, c)) for c in basis):
            continue
        generators.append(z)
    return sorted(generators)
