import itertools

import semigrouplib


def assert_model_is_sound(model):
    rs = model.rays
    assert list(model.hilbert_basis) == sorted(model.hilbert_basis)
    assert list(model.omega_gens) == sorted(model.omega_gens)
    assert len(model.parallelotope) == rs.det_abs

    for ray in rs.rays:
        assert ray in model.hilbert_basis

    for c in model.hilbert_basis:
        assert semigrouplib.contains(model, c)

    for g in model.omega_gens:
        assert semigrouplib.in_omega(model, g)

    # no generator is another generator plus a point of H
    for g, h in itertools.permutations(model.omega_gens, 2):
        assert not semigrouplib.contains_shifted(model, h, g)
