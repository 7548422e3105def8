import dataclasses

import pytest  # pyright: ignore

import semigrouplib
from semigrouplib import _examples, oracle
from semigrouplib.planar import (
    ALL_PAIRS_COVERED,
    SearchKind,
    find_ulrich,
    h_star,
    is_ulrich,
    is_ulrich_bottom,
    orient,
    quick_filters,
    ulrich_one_one,
)
from semigrouplib.survey import instances


def oriented(*rays):
    return orient(semigrouplib.build(list(rays)))


def inner_basis(om):
    return [c for c in om.base.hilbert_basis if c not in (om.a1, om.a2)]


# is_ulrich ----------------------------------------------------------------------------


def test_is_ulrich_when_every_basis_element_is_ulrich():
    # given
    om = orient(_examples.every_basis_element_ulrich())

    # when
    verdict = is_ulrich(om, (16, 3))

    # then
    assert verdict.ulrich
    assert verdict.certificate == ALL_PAIRS_COVERED
    assert verdict.basis_pairs is True


def test_is_ulrich_rejects_bottom_with_certificate():
    # given
    om = orient(_examples.bottom_not_ulrich())

    # when
    verdict = is_ulrich(om, (4, 5))

    # then
    assert not verdict.ulrich
    assert verdict.certificate == ((5, 6), (5, 6))
    assert verdict.basis_pairs is False


def test_is_ulrich_certificate_escapes_every_shift():
    # given
    om = orient(_examples.bottom_not_ulrich())

    # when
    p, q = is_ulrich(om, (4, 5)).certificate
    s = (p[0] + q[0], p[1] + q[1])

    # then
    for base in [(4, 5), om.a1, om.a2]:
        assert not semigrouplib.contains_shifted(om.base, base, s)


def test_is_ulrich_accepts_element_above_bottom():
    om = orient(_examples.bottom_not_ulrich())
    assert is_ulrich(om, (5, 6)).ulrich


def test_is_ulrich_finds_no_ulrich_basis_element():
    om = orient(_examples.no_ulrich_element())
    for b in [(1, 1), (2, 1), (1, 2)]:
        assert not is_ulrich(om, b).ulrich


def test_is_ulrich_with_non_ag2_semigroup():
    # given
    om = orient(_examples.ulrich_but_not_ag2())

    # then
    assert is_ulrich(om, (1, 2)).ulrich
    assert not is_ulrich(om, (1, 1)).ulrich


def test_is_ulrich_off_the_basis_has_no_basis_pair_answer():
    # given
    om = orient(_examples.bottom_not_ulrich())

    # when
    verdict = is_ulrich(om, (9, 11))

    # then
    assert verdict.basis_pairs is None


def test_is_ulrich_raises_outside_the_interior():
    om = orient(_examples.no_ulrich_element())
    with pytest.raises(semigrouplib.NotInOmega):
        is_ulrich(om, (5, 2))
    with pytest.raises(semigrouplib.NotInOmega):
        is_ulrich(om, (1, 0))


def test_is_ulrich_agrees_with_pairwise_test_on_basis_elements():
    for a1, a2 in instances(7):
        om = oriented(a1, a2)
        for b in inner_basis(om):
            verdict = is_ulrich(om, b)
            assert verdict.basis_pairs == verdict.ulrich, (a1, a2, b)
            assert oracle.ulrich_pairwise_brute(om, b) == verdict.ulrich, (a1, a2, b)


def test_gorenstein_generator_is_ulrich():
    for a1, a2 in instances(7):
        om = oriented(a1, a2)
        if semigrouplib.is_gorenstein(om.base):
            (g,) = om.base.omega_gens
            assert is_ulrich(om, g).ulrich, (a1, a2)


# is_ulrich_bottom ---------------------------------------------------------------------


def test_is_ulrich_bottom():
    assert not is_ulrich_bottom(orient(_examples.ulrich_but_not_ag2()))
    assert is_ulrich_bottom(orient(_examples.every_basis_element_ulrich()))
    assert is_ulrich_bottom(oriented((5, 1), (1, 7)))


def test_is_ulrich_bottom_agrees_with_criterion():
    for a1, a2 in instances(8):
        om = oriented(a1, a2)
        assert is_ulrich_bottom(om) == is_ulrich(om, om.bottom).ulrich, (a1, a2)


def test_three_ways_of_testing_one_one_agree():
    for a1, a2 in instances(10, require_ones_interior=True):
        om = oriented(a1, a2)
        residue = ulrich_one_one(om)
        assert residue == is_ulrich_bottom(om), (a1, a2)
        assert residue == is_ulrich(om, om.bottom).ulrich, (a1, a2)


def test_family_with_unit_coordinates_has_ulrich_bottom():
    for a in range(2, 7):
        for b in range(2, 7):
            om = oriented((a, 1), (1, b))
            assert is_ulrich_bottom(om)
            assert ulrich_one_one(om)


def test_sums_across_parallelograms_lie_above_bottom():
    for a1, a2 in instances(5):
        om = oriented(a1, a2)
        bound = (om.x1 + om.x2, om.y1 + om.y2)
        first = oracle.cone_points_brute([om.bottom, om.a1], bound) - {(0, 0)}
        second = oracle.cone_points_brute([om.bottom, om.a2], bound) - {(0, 0)}
        for p in first:
            for q in second:
                s = (p[0] + q[0], p[1] + q[1])
                assert semigrouplib.contains_shifted(om.base, om.bottom, s), (a1, a2, p, q)


# quick_filters ------------------------------------------------------------------------


def test_quick_filters_when_every_basis_element_is_ulrich():
    filters = quick_filters(orient(_examples.every_basis_element_ulrich()))
    assert filters.all_basis_elements_ulrich


def test_quick_filters_for_family_with_unit_coordinates():
    filters = quick_filters(oriented((5, 1), (1, 7)))
    assert filters.bottom_forced_ulrich
    assert filters.only_candidate_is_ones


def test_quick_filters_when_one_one_is_the_only_candidate():
    # when
    filters = quick_filters(orient(_examples.no_ulrich_element()))

    # then
    assert filters.only_candidate_is_ones
    assert filters.only_candidate_is_bottom
    assert not filters.bottom_forced_ulrich


def test_quick_filters_with_horizontal_ray():
    filters = quick_filters(orient(_examples.ulrich_but_not_ag2()))
    assert not filters.only_candidate_is_ones


def test_closed_parallelogram_makes_every_basis_element_ulrich():
    for a1, a2 in instances(7):
        om = oriented(a1, a2)
        if quick_filters(om).all_basis_elements_ulrich:
            for b in inner_basis(om):
                assert is_ulrich(om, b).ulrich, (a1, a2, b)


def test_doubled_bottom_in_parallelogram_excludes_other_basis_elements():
    for a1, a2 in instances(7):
        om = oriented(a1, a2)
        if quick_filters(om).only_candidate_is_bottom:
            for b in inner_basis(om):
                if b != om.bottom:
                    assert not is_ulrich(om, b).ulrich, (a1, a2, b)


def test_forced_bottom_is_ulrich():
    for a1, a2 in instances(7):
        om = oriented(a1, a2)
        if quick_filters(om).bottom_forced_ulrich:
            assert is_ulrich(om, om.bottom).ulrich, (a1, a2)


# find_ulrich --------------------------------------------------------------------------


def test_find_ulrich_returns_finite_set():
    # when
    result = find_ulrich(orient(_examples.bottom_not_ulrich()))

    # then
    assert result.kind is SearchKind.FINITE_SET
    assert result.elements == ((5, 6),)
    assert result.found


def test_find_ulrich_returns_all_of_omega():
    # when
    result = find_ulrich(orient(_examples.every_basis_element_ulrich()))

    # then
    assert result.kind is SearchKind.ALL_OF_OMEGA
    assert result.elements == ()
    assert result.found


def test_find_ulrich_for_regular_semigroup():
    result = find_ulrich(orient(_examples.regular()))
    assert result.kind is SearchKind.ALL_OF_OMEGA


def test_find_ulrich_finds_nothing():
    # when
    result = find_ulrich(orient(_examples.no_ulrich_element()))

    # then
    assert result.kind is SearchKind.FINITE_SET
    assert result.elements == ()
    assert not result.found


def test_find_ulrich_raises_when_box_exceeds_budget():
    # given
    model = dataclasses.replace(
        _examples.bottom_not_ulrich(), options=semigrouplib.SemigroupOptions(box_budget=20)
    )

    # when/then
    with pytest.raises(semigrouplib.LimitExceeded):
        find_ulrich(orient(model))


def test_find_ulrich_is_consistent_with_basis_elements():
    for a1, a2 in instances(6):
        om = oriented(a1, a2)
        result = find_ulrich(om)
        for b in inner_basis(om):
            ulrich = is_ulrich(om, b).ulrich
            if result.kind is SearchKind.ALL_OF_OMEGA:
                assert ulrich, (a1, a2, b)
            else:
                assert ulrich == (b in result.elements), (a1, a2, b)
        for b in result.elements:
            assert is_ulrich(om, b).ulrich


def test_regular_semigroup_has_ulrich_elements_above_ray_sum():
    # given
    om = orient(_examples.regular())
    c = (om.x1 + om.x2, om.y1 + om.y2)

    # then
    for a in (om.a1, om.a2):
        assert is_ulrich(om, (a[0] + c[0], a[1] + c[1])).ulrich


# shifts and H_i^* ---------------------------------------------------------------------


def test_shifts_cover_every_point_outside_the_h_star_sets():
    for a1, a2 in instances(5):
        # given
        om = oriented(a1, a2)
        bound = (2 * (om.x1 + om.x2), 2 * (om.y1 + om.y2))
        uncovered = set(h_star(om, 1)) | set(h_star(om, 2))

        # when
        points = oracle.cone_points_brute([om.a1, om.a2], bound) - {(0, 0)}

        # then
        for z in points:
            covered = any(
                semigrouplib.contains_shifted(om.base, base, z)
                for base in (om.bottom, om.a1, om.a2)
            )
            assert covered == (z not in uncovered), (a1, a2, z)
