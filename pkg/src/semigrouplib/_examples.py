"""Examples that are used in the documentation and the tests."""

import semigrouplib


def every_basis_element_ulrich():
    """Rays (11, 2) and (31, 6): every interior element is Ulrich."""
    return semigrouplib.build([(11, 2), (31, 6)])


def no_ulrich_element():
    """Rays (5, 2) and (2, 5): none of the three inner basis elements is Ulrich."""
    return semigrouplib.build([(5, 2), (2, 5)])


def bottom_not_ulrich():
    """Rays (11, 13) and (3, 4): the bottom element fails, (5, 6) is Ulrich."""
    return semigrouplib.build([(11, 13), (3, 4)])


def ulrich_but_not_ag2():
    """Rays (1, 0) and (2, 5): (1, 2) is Ulrich, the bottom element is not."""
    return semigrouplib.build([(1, 0), (2, 5)])


def gorenstein():
    """Rays (2, 1) and (1, 2): the interior is generated by (1, 1)."""
    return semigrouplib.build([(2, 1), (1, 2)])


def regular():
    """The standard basis of the plane."""
    return semigrouplib.build([(1, 0), (0, 1)])


def no_bottom_element():
    """A three-dimensional semigroup with no bottom element that is not nearly
    Gorenstein."""
    return semigrouplib.build([(5, 3, 1), (1, 5, 2), (8, 3, 5)])


def not_slim():
    """A three-dimensional semigroup with a thin boundary basis element."""
    return semigrouplib.build([(11, 13, 0), (3, 4, 0), (0, 0, 1)])
