"""Planar semigroups with their rays put in a standard order."""

import dataclasses

from ..core import IntVector, Inapplicable, SemigroupModel, bottom_element


def cross(p, q) -> int:
    """The 2x2 determinant ``p_x q_y - p_y q_x``."""
    return p[0] * q[1] - p[1] * q[0]


@dataclasses.dataclass(frozen=True)
class OrientedModel:
    """A planar semigroup whose first ray is the one closer to the x-axis.

    Created by :func:`orient`.

    Attributes
    ----------
    base : SemigroupModel
        The underlying model.
    a1 : IntVector
        The ray ``(x_1, y_1)`` of smaller slope.
    a2 : IntVector
        The ray ``(x_2, y_2)`` of larger slope (or the vertical ray).
    bottom : IntVector
        The bottom element ``(u, v)``, which always exists in the plane.

    """

    base: SemigroupModel
    a1: IntVector
    a2: IntVector
    bottom: IntVector

    @property
    def x1(self) -> int:
        return self.a1[0]

    @property
    def y1(self) -> int:
        return self.a1[1]

    @property
    def x2(self) -> int:
        return self.a2[0]

    @property
    def y2(self) -> int:
        return self.a2[1]

    @property
    def u(self) -> int:
        return self.bottom[0]

    @property
    def v(self) -> int:
        return self.bottom[1]


def orient(m: SemigroupModel) -> OrientedModel:
    """Order the rays of a planar model so that ``y_1/x_1 < y_2/x_2``.

    A horizontal ray always becomes ``a_1`` and a vertical ray ``a_2``.

    Raises
    ------
    Inapplicable
        If the model is not planar.

    """
    if m.dim != 2:
        raise Inapplicable(f"Orientation is defined for planar semigroups, not d = {m.dim}.")

    first, second = m.rays.rays
    if cross(first, second) < 0:
        first, second = second, first

    bottom = bottom_element(m)
    # the meet of two interior points of a planar cone is interior
    assert bottom is not None

    return OrientedModel(base=m, a1=first, a2=second, bottom=bottom)
