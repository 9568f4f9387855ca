import random

import pytest

from movsurf.exactla import det, poly_det
from movsurf.implicitize import (
    MethodHypothesisError,
    build_MT_product,
    build_Ttilde,
    extract_power,
    implicit_direct_resultant,
    implicit_moving_quadrics,
    kernel_tableau,
    tableau_degree,
    validate_on_surface,
)
from movsurf.movmat import build_MQd
from movsurf.polycore import (
    CUBIC_ONTO_PLANE,
    BILINEAR_QUADRIC,
    IMPLICIT_VARS,
    TENSOR_VARS,
    ParamSurface,
    SparsePoly,
    parse_poly,
)
from movsurf.resultant import BasePointError

X = lambda s: parse_poly(s, IMPLICIT_VARS)

# Frozen oracle: lex Groebner elimination of s, t (and a saturation variable)
# from the affine chart u = v = 1 of bilinear quadric, homogenized with X4.
BILINEAR_QUADRIC_IMPLICIT = X("X1*X2 + X1*X3 - X1*X4 + X2^2 + 3*X2*X3 - 2*X2*X4 + X3^2 - 2*X3*X4 + X4^2")


def test_bilinear_quadric_by_moving_quadrics():
    r = implicit_moving_quadrics(BILINEAR_QUADRIC)
    assert r.F == BILINEAR_QUADRIC_IMPLICIT
    assert r.power == 1 and r.degree == 2
    assert all(r.checks.values())
    assert validate_on_surface(r.F, BILINEAR_QUADRIC, trials=25, seed=3).passed


def test_bilinear_quadric_routes_agree():
    assert implicit_direct_resultant(BILINEAR_QUADRIC).F == BILINEAR_QUADRIC_IMPLICIT


def test_tableau_properties_bilinear_quadric():
    K = kernel_tableau(BILINEAR_QUADRIC)
    assert (build_MQd(BILINEAR_QUADRIC, 2) @ K.T).is_zero()
    Tt = build_Ttilde(K)
    at_x4 = Tt.evaluate((0, 0, 0, 1))
    assert abs(det(at_x4)) == 1
    assert all(sorted(r) == [0] * (len(r) - 1) + [1] for r in at_x4.rows)
    D = poly_det(Tt, tableau_degree(K))
    Dm = poly_det(build_MT_product(K), tableau_degree(K))
    assert D == Dm or D == -Dm


@pytest.mark.parametrize("n", [1, 2])
def test_random_triangular(n):
    S = ParamSurface.random("triangular", (n,), random.Random(10 + n))
    r = implicit_moving_quadrics(S)
    assert r.degree == n * n
    assert all(r.checks.values())
    assert validate_on_surface(r.F, S, trials=10).passed


def test_random_tensor_1_2_and_direct_route_share_radical():
    S = ParamSurface.random("tensor", (1, 2), random.Random(2))
    a = implicit_moving_quadrics(S)
    b = implicit_direct_resultant(S)
    assert a.degree == 4 and all(a.checks.values())
    assert a.root == b.root


def test_improper_parametrization_gives_a_square():
    # bilinear quadric precomposed with (s, u) -> (s^2, u^2): every point is hit twice
    sub = [SparsePoly.var(TENSOR_VARS, "s") ** 2, SparsePoly.var(TENSOR_VARS, "u") ** 2,
           SparsePoly.var(TENSOR_VARS, "t"), SparsePoly.var(TENSOR_VARS, "v")]
    xs = [p.compose(TENSOR_VARS, sub) for p in BILINEAR_QUADRIC.x]
    S = ParamSurface("tensor", (2, 1), tuple(xs))
    r = implicit_moving_quadrics(S)
    assert r.power == 2
    assert r.root == BILINEAR_QUADRIC_IMPLICIT
    assert all(r.checks.values())


def test_cubic_onto_plane_fails_the_moving_quadric_hypotheses():
    with pytest.raises(ValueError, match="rank"):
        implicit_moving_quadrics(CUBIC_ONTO_PLANE)


def test_base_points_are_refused():
    S = ParamSurface.tensor(1, 1, ["s*t", "s*v", "u*t", "s*t+s*v"])
    with pytest.raises(BasePointError, match="base points detected"):
        implicit_direct_resultant(S)
    with pytest.raises(BasePointError, match="base points detected"):
        implicit_moving_quadrics(S)


def test_extract_power():
    G = X("X1 + X2 + X3 - X4")
    assert extract_power((G ** 3).scale(-4)) == (G, 3)
    H = X("X1*X2 - X3^2")
    assert extract_power((H ** 2)) == (H, 2)
    assert extract_power(H * G * G) == (H * G * G, 1)


def test_validation_detects_wrong_equation():
    rep = validate_on_surface(X("X1 - X2"), BILINEAR_QUADRIC, trials=10)
    assert not rep.passed and rep.zeros < 10
    with pytest.raises(ValueError):
        validate_on_surface(X("X1 - 1"), BILINEAR_QUADRIC)
