"""The lattice points strictly inside the parallelograms spanned by the bottom
element and a ray, and the residue arithmetic that describes them.

For a planar semigroup with oriented rays ``a_1 = (x_1, y_1)``,
``a_2 = (x_2, y_2)`` and bottom element ``b = (u, v)``, the set ``H_i^*``
consists of the integer points in the open parallelogram with vertices
``0, b, a_i, b + a_i``. The bottom element is Ulrich exactly when neither set
contains the sum of two of its own points.

Every function here works in the frame of the first ray. Questions about the
second ray are answered by swapping coordinates, which exchanges the roles of
the two rays.

"""

import dataclasses
import itertools
import logging
from typing import Tuple

from ..core import Inapplicable, IntVector, in_omega
from ._oriented import OrientedModel

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class HStarSet:
    """The interior points of the parallelogram on the bottom element and a ray.

    Attributes
    ----------
    index : int
        1 or 2, the ray spanning the parallelogram with the bottom element.
    points : tuple of IntVector
        The points, sorted lexicographically.

    """

    index: int
    points: Tuple[IntVector, ...]

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, p):
        return tuple(p) in self.points


# private helpers ======================================================================


def _check_index(i):
    if i not in (1, 2):
        raise ValueError(f"The ray index must be 1 or 2, got {i!r}.")


def _frame(om: OrientedModel, i: int) -> Tuple[int, int, int, int]:
    """``(x, y, u, v)`` with the i-th ray playing the role of the first ray."""
    if i == 1:
        return om.x1, om.y1, om.u, om.v
    return om.y2, om.x2, om.v, om.u


def _unframe(p, i: int) -> IntVector:
    if i == 1:
        return tuple(p)
    return (p[1], p[0])


def _frame_points(x: int, y: int, u: int, v: int) -> list:
    """The points ``(k, q_k + 1)`` with ``u < k < x`` and ``r_k >= x - D``.

    Here ``k y = q_k x + r_k`` and ``D = v x - u y`` is the determinant of the
    bottom element against the ray.

    """
    if y == 0:
        return []
    threshold = x - (v * x - u * y)
    points = []
    for k in range(u + 1, x):
        q, r = divmod(k * y, x)
        if r >= threshold:
            points.append((k, q + 1))
    return points


def _residue_bound_holds(total: int, bound: int) -> bool:
    return total < bound


def _ag_by_residues(om: OrientedModel, i: int) -> bool:
    x, y, u, v = _frame(om, i)
    bound = 2 * x - (v * x - u * y)
    ks = [k for k, _ in _frame_points(x, y, u, v)]
    for k, l in itertools.combinations_with_replacement(ks, 2):
        if k + l < x and not _residue_bound_holds((k * y) % x + (l * y) % x, bound):
            return False
    return True


def _ag_by_pairs(om: OrientedModel, i: int) -> bool:
    points = h_star(om, i)
    for p, q in itertools.combinations_with_replacement(points.points, 2):
        if (p[0] + q[0], p[1] + q[1]) in points:
            return False
    return True


def _one_one_residue(top: int, gap: int) -> bool:
    return top % gap == 1 % gap


# public functions =====================================================================


def h_star(om: OrientedModel, i: int) -> HStarSet:
    """The set ``H_i^*`` of interior points of the i-th parallelogram.

    Computed by residue arithmetic: in the frame of the first ray, the point
    with first coordinate ``k`` is ``(k, q_k + 1)`` and it is present exactly
    when the residue of ``k y_1`` modulo ``x_1`` is at least
    ``x_1 - (v x_1 - u y_1)``.

    Parameters
    ----------
    om : OrientedModel
        The oriented planar semigroup.
    i : int
        1 or 2.

    Returns
    -------
    HStarSet

    Example
    -------
    >>> from semigrouplib import build
    >>> from semigrouplib.planar import orient
    >>> h_star(orient(build([(11, 13), (3, 4)])), 1).points
    ((5, 6), (10, 12))

    """
    _check_index(i)
    points = sorted(_unframe(p, i) for p in _frame_points(*_frame(om, i)))
    return HStarSet(index=i, points=tuple(points))


def h_star_count(om: OrientedModel, i: int) -> int:
    """The size of ``H_i^*`` from determinants alone.

    This is ``v x_1 - u y_1 - 1`` for the first ray and ``u y_2 - v x_2 - 1``
    for the second, one less than the determinant of the bottom element
    against the ray.

    """
    _check_index(i)
    x, y, u, v = _frame(om, i)
    return v * x - u * y - 1


def is_ag(om: OrientedModel, i: int, method: str = "residues") -> bool:
    """Whether no sum of two points of ``H_i^*`` lies in ``H_i^*`` again.

    Parameters
    ----------
    om : OrientedModel
        The oriented planar semigroup.
    i : int
        1 or 2.
    method : str
        ``"residues"`` compares residues ``r_k + r_l < 2 x_1 - (v x_1 - u y_1)``
        for all first coordinates with ``k + l < x_1``. ``"pairs"`` adds the
        points of ``H_i^*`` pairwise and looks the sums up. Both give the
        same answer.

    """
    _check_index(i)
    if method == "residues":
        return _ag_by_residues(om, i)
    if method == "pairs":
        return _ag_by_pairs(om, i)
    raise ValueError(f"Unknown method {method!r}; expected 'residues' or 'pairs'.")


def ulrich_one_one(om: OrientedModel) -> bool:
    """Whether ``(1, 1)`` is Ulrich, by pure residue arithmetic.

    When ``(1, 1)`` is interior it is the bottom element, and it is Ulrich
    exactly when ``x_1 ≡ 1 (mod x_1 - y_1)`` and ``y_2 ≡ 1 (mod y_2 - x_2)``.

    Raises
    ------
    Inapplicable
        If ``(1, 1)`` is not in the interior of the cone.

    """
    if not in_omega(om.base, (1, 1)):
        raise Inapplicable("The point (1, 1) is not in the interior of the cone.")

    first = _one_one_residue(om.x1, om.x1 - om.y1)
    second = _one_one_residue(om.y2, om.y2 - om.x2)
    return first and second


def h1_star_recursive(om: OrientedModel) -> list:
    """``H_1^*`` listed by the division recursion, when the bottom is ``(1, 1)``.

    With ``m = x_1 - y_1`` and ``n = m - 1``, write ``x_1 = l_1 m + s_1`` and
    ``y_1 + s_{t-1} = l_t m + s_t`` for ``t = 2, ..., n``. The t-th point is
    ``(t + L_t, L_t)`` where ``L_t = l_1 + ... + l_t``.

    Returns
    -------
    list of IntVector
        The points ``p_1, ..., p_n`` in order of increasing first coordinate.

    Raises
    ------
    Inapplicable
        If the bottom element is not ``(1, 1)``, or if ``x_1 - y_1 = 1`` so
        that ``H_1^*`` is empty.

    """
    if om.bottom != (1, 1):
        raise Inapplicable(f"The bottom element is {om.bottom}, not (1, 1).")

    m = om.x1 - om.y1
    n = m - 1
    if n <= 0:
        raise Inapplicable("The first parallelogram has no interior points.")

    points = []
    total, s = divmod(om.x1, m)
    points.append((1 + total, total))
    for t in range(2, n + 1):
        l, s = divmod(om.y1 + s, m)
        total += l
        points.append((t + total, total))

    logger.debug("recursion for x_1 = %d, y_1 = %d gave %s", om.x1, om.y1, points)
    return points
