import random

import pytest
from hypothesis import given, settings, strategies as st

from movsurf.exactla import det, rank
from movsurf.movmat import (
    build_MP,
    build_MP_I,
    build_MQd,
    build_MSd,
    build_MTd,
    choose_index_set_I,
    gamma_sets,
    moving_space_basis,
    valid_index_sets,
    validate_index_set,
)
from movsurf.polycore import CUBIC_ONTO_PLANE, BILINEAR_QUADRIC, IMPLICIT_VARS, ParamSurface, SparsePoly


def follows(S, form):
    """Substitute X_i -> x_i into a moving form in (params, X1..X4)."""
    np_ = len(S.vars)
    total = SparsePoly.zero(S.vars)
    for e, c in form.terms.items():
        term = SparsePoly.monomial(S.vars, e[:np_], c)
        for xi, k in zip(S.x, e[np_:]):
            term = term * xi ** k
        total = total + term
    return not total


def test_gamma_order_puts_x4_power_last():
    g = gamma_sets(2)
    assert g.all[0] == (2, 0, 0, 0) and g.all[-1] == (0, 0, 0, 2)
    assert len(g.all) == 10 and len(g.gamma0) == 9 and len(g.gamma1) == 5


def test_bilinear_quadric_shapes_and_determinants():
    assert build_MP(BILINEAR_QUADRIC).shape == (4, 4)
    assert build_MQd(BILINEAR_QUADRIC, 2).shape == (9, 10)
    assert build_MSd(BILINEAR_QUADRIC, 2).shape == (9, 9)
    assert build_MTd(BILINEAR_QUADRIC, 2).shape == (9, 9)
    # derived: all three determinants are 1 for this surface
    assert det(build_MP(BILINEAR_QUADRIC)) == 1
    assert det(build_MSd(BILINEAR_QUADRIC, 2)) == 1
    assert det(build_MTd(BILINEAR_QUADRIC, 2)) == 1


def test_cubic_onto_plane_shapes():
    assert build_MP(CUBIC_ONTO_PLANE).shape == (21, 24)
    assert rank(build_MP(CUBIC_ONTO_PLANE)) == 18
    with pytest.raises(ValueError, match="rank 18"):
        choose_index_set_I(CUBIC_ONTO_PLANE)


@pytest.mark.parametrize("kind,deg", [("tensor", (1, 1)), ("tensor", (2, 1)), ("triangular", (2,))])
def test_degree_one_matrices_coincide_with_MP(kind, deg):
    S = ParamSurface.random(kind, deg, random.Random(5))
    assert build_MSd(S, 1) == build_MP(S)
    if S.is_tensor:
        assert build_MTd(S, 1) == build_MP(S)


def test_moving_quadrics_and_planes_of_bilinear_quadric():
    assert len(moving_space_basis(BILINEAR_QUADRIC, 2, (1, 1))) == 24
    # 16 unknowns, rank 9: seven independent planes of bidegree (1,1)
    assert len(moving_space_basis(BILINEAR_QUADRIC, 1, (1, 1))) == 7
    planes = [str(p) for p in moving_space_basis(BILINEAR_QUADRIC, 1, (1, 0))]
    assert planes == ["-s*X2 - s*X3 + s*X4 - u*X2", "s*X3 - u*X1 - u*X2 - u*X3 + u*X4"]


def test_moving_plane_of_cubic_onto_plane():
    (plane,) = moving_space_basis(CUBIC_ONTO_PLANE, 1, 0)
    assert str(plane) == "-X1 - X2 - X3 + X4"


@pytest.mark.parametrize("S,d,sigma", [(BILINEAR_QUADRIC, 1, (1, 1)), (BILINEAR_QUADRIC, 2, (0, 1)),
                                       (CUBIC_ONTO_PLANE, 1, 1)])
def test_basis_elements_follow_the_surface(S, d, sigma):
    for form in moving_space_basis(S, d, sigma):
        assert follows(S, form)


def test_index_sets():
    S = ParamSurface.random("triangular", (2,), random.Random(1))
    assert validate_index_set(S, [(1, 0), (0, 0)]) == ((0, 0), (1, 0))
    with pytest.raises(ValueError):
        validate_index_set(S, [(0, 0), (1, 1)])  # j + k must stay below n
    with pytest.raises(ValueError):
        validate_index_set(S, [(0, 0)])
    for I in valid_index_sets(S):
        A = build_MP_I(S, I)
        assert A.is_square() and det(A) != 0
    with pytest.raises(ValueError, match="index set"):
        build_MTd(S, 2)


@given(st.integers(0, 10_000), st.sampled_from([(1, 1), (1, 2), (2, 1)]))
@settings(max_examples=8, deadline=None)
def test_tensor_square_sizes(seed, deg):
    S = ParamSurface.random("tensor", deg, random.Random(seed))
    m, n = deg
    for d in (1, 2, 3):
        side = (d + 1) ** 2 * m * n
        assert build_MSd(S, d).shape == (side, side)
        assert build_MTd(S, d).shape == (side, side)


def test_triangular_square_after_index_set():
    S = ParamSurface.random("triangular", (2,), random.Random(4))
    I = choose_index_set_I(S)
    assert build_MSd(S, 2, I).shape == (21, 21)
    assert build_MSd(S, 2).shape == (21, 21 + 2 * 3)
