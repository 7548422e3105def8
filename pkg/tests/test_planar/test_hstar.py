import pytest  # pyright: ignore

import semigrouplib
from semigrouplib import _examples, oracle
from semigrouplib.planar import (
    h1_star_recursive,
    h_star,
    h_star_count,
    is_ag,
    orient,
    ulrich_one_one,
)
from semigrouplib.survey import instances


def oriented(*rays):
    return orient(semigrouplib.build(list(rays)))


# orient -------------------------------------------------------------------------------


def test_orient_puts_smaller_slope_first():
    # when
    om = oriented((31, 6), (11, 2))

    # then
    assert om.a1 == (11, 2)
    assert om.a2 == (31, 6)
    assert om.bottom == (16, 3)


def test_orient_puts_horizontal_ray_first():
    om = oriented((2, 5), (1, 0))
    assert (om.a1, om.a2) == ((1, 0), (2, 5))


def test_orient_puts_vertical_ray_second():
    om = oriented((0, 1), (1, 0))
    assert (om.a1, om.a2) == ((1, 0), (0, 1))


def test_orient_raises_outside_the_plane():
    with pytest.raises(semigrouplib.Inapplicable):
        orient(_examples.no_bottom_element())


# h_star -------------------------------------------------------------------------------


def test_h_star_one():
    # given
    om = orient(_examples.bottom_not_ulrich())

    # when
    points = h_star(om, 1)

    # then
    assert points.index == 1
    assert points.points == ((5, 6), (10, 12))
    assert h_star(om, 2).points == ()


def test_h_star_empty_when_determinant_is_one():
    # given
    om = orient(_examples.every_basis_element_ulrich())

    # then
    assert h_star(om, 1).points == ()
    assert h_star_count(om, 1) == 0


def test_h_star_two_by_swapping_coordinates():
    # given
    om = orient(_examples.ulrich_but_not_ag2())

    # then
    assert h_star(om, 2).points == ((1, 2), (2, 4))
    assert h_star(om, 1).points == ()


def test_h_star_two_when_every_inner_point_is_on_a_line():
    # given
    om = orient(_examples.every_basis_element_ulrich())

    # then
    assert h_star(om, 2).points == ((21, 4), (26, 5))


def test_h_star_raises_on_bad_index():
    om = orient(_examples.regular())
    with pytest.raises(ValueError):
        h_star(om, 3)


def test_h_star_agrees_with_parallelogram_scan():
    for a1, a2 in instances(8):
        om = oriented(a1, a2)
        for i, ray in ((1, om.a1), (2, om.a2)):
            points = h_star(om, i)
            assert set(points) == oracle.h_star_brute(om.bottom, ray), (a1, a2, i)
            assert len(points) == h_star_count(om, i)


def test_h_star_points_respect_inner_bounds():
    for a1, a2 in instances(8):
        om = oriented(a1, a2)
        for k, r in h_star(om, 1):
            assert om.u < k < om.x1 and om.v <= r <= om.y1
        for k, r in h_star(om, 2):
            assert om.v < r < om.y2 and om.u <= k <= om.x2


# h_star_count -------------------------------------------------------------------------


def test_h_star_count_from_determinants():
    # given
    om = orient(_examples.bottom_not_ulrich())

    # then
    assert h_star_count(om, 1) == 2
    assert h_star_count(om, 2) == 0


def test_h_star_count_of_gorenstein_semigroup():
    om = orient(_examples.gorenstein())
    assert h_star_count(om, 1) == h_star_count(om, 2) == 0


def test_gorenstein_exactly_when_both_determinants_are_one():
    for a1, a2 in instances(8):
        om = oriented(a1, a2)
        by_determinants = h_star_count(om, 1) == 0 and h_star_count(om, 2) == 0
        assert semigrouplib.is_gorenstein(om.base) == by_determinants, (a1, a2)


# is_ag --------------------------------------------------------------------------------


def test_is_ag_fails_when_a_point_doubles_into_the_set():
    # given
    om = orient(_examples.ulrich_but_not_ag2())

    # then
    assert not is_ag(om, 2)
    assert not is_ag(om, 2, method="pairs")
    assert is_ag(om, 1)


def test_is_ag_holds_when_sums_leave_the_parallelogram():
    om = orient(_examples.every_basis_element_ulrich())
    assert is_ag(om, 2)
    assert is_ag(om, 2, method="pairs")


def test_is_ag_holds_with_at_most_one_point():
    for a1, a2 in instances(8):
        om = oriented(a1, a2)
        for i in (1, 2):
            if h_star_count(om, i) <= 1:
                assert is_ag(om, i)


def test_is_ag_residue_and_pair_methods_agree():
    for a1, a2 in instances(8):
        om = oriented(a1, a2)
        for i in (1, 2):
            assert is_ag(om, i, "residues") == is_ag(om, i, "pairs"), (a1, a2, i)


def test_is_ag_raises_on_unknown_method():
    om = orient(_examples.regular())
    with pytest.raises(ValueError):
        is_ag(om, 1, method="guess")


# ulrich_one_one -----------------------------------------------------------------------


def test_ulrich_one_one_residues():
    assert not ulrich_one_one(orient(_examples.no_ulrich_element()))
    assert ulrich_one_one(oriented((5, 1), (1, 7)))
    assert not ulrich_one_one(orient(_examples.ulrich_but_not_ag2()))


def test_ulrich_one_one_raises_when_one_one_is_not_interior():
    with pytest.raises(semigrouplib.Inapplicable):
        ulrich_one_one(orient(_examples.bottom_not_ulrich()))


# h1_star_recursive --------------------------------------------------------------------


def test_h1_star_recursive_with_two_points():
    # given
    om = orient(_examples.no_ulrich_element())

    # then
    assert h1_star_recursive(om) == [(2, 1), (4, 2)]
    assert set(h1_star_recursive(om)) == set(h_star(om, 1))


def test_h1_star_recursive_with_unit_height():
    # given
    om = oriented((7, 1), (1, 3))

    # then
    assert h1_star_recursive(om) == [(m, 1) for m in range(2, 7)]


def test_h1_star_recursive_raises_on_empty_recursion():
    with pytest.raises(semigrouplib.Inapplicable):
        h1_star_recursive(oriented((2, 1), (1, 2)))


def test_h1_star_recursive_raises_when_bottom_is_not_one_one():
    with pytest.raises(semigrouplib.Inapplicable):
        h1_star_recursive(orient(_examples.bottom_not_ulrich()))


def test_h1_star_recursive_agrees_with_residues():
    for a1, a2 in instances(8, require_ones_interior=True):
        om = oriented(a1, a2)
        if om.x1 - om.y1 > 1:
            assert set(h1_star_recursive(om)) == set(h_star(om, 1)), (a1, a2)
