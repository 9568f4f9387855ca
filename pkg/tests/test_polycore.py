import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from movsurf.polycore import (
    BILINEAR_QUADRIC,
    IMPLICIT_VARS,
    TENSOR_VARS,
    TRIANGULAR_VARS,
    ParamSurface,
    PolySyntaxError,
    SparsePoly,
    dehomogenize,
    evaluate,
    homogenize,
    interpolate,
    monomial_basis,
    parse_poly,
    primitive_normal_form,
)

T = TRIANGULAR_VARS

coeffs = st.integers(-5, 5)


@st.composite
def polys(draw, vars=T, max_deg=3):
    mons = [e for d in range(max_deg + 1) for e in monomial_basis(d, vars)]
    chosen = draw(st.lists(st.sampled_from(mons), max_size=5))
    return SparsePoly(vars, {m: draw(coeffs) for m in chosen})


def test_parse_and_canonical_print():
    p = parse_poly("(s+t)^2 - 2*s*t", T)
    assert str(p) == "s^2 + t^2"
    assert str(parse_poly("X1*X2 - 2*X2*X4 + X4^2", IMPLICIT_VARS)) == "X1*X2 - 2*X2*X4 + X4^2"


def test_parse_accepts_double_star_and_constant_division():
    assert parse_poly("s**2/2", T) == SparsePoly(T, {(2, 0, 0): Fraction(1, 2)})


@pytest.mark.parametrize("text", ["2s", "s*w", "s^-1", "s +", "(s"])
def test_parse_errors(text):
    with pytest.raises(PolySyntaxError):
        parse_poly(text, T)


def test_graded_lex_order_on_tensor_monomials():
    # bidegree (1,1) basis in (s,u;t,v): st, sv, ut, uv
    basis = monomial_basis((1, 1), TENSOR_VARS)
    assert [str(SparsePoly.monomial(TENSOR_VARS, e)) for e in basis] == ["s*t", "s*v", "u*t", "u*v"]
    assert [str(SparsePoly.monomial(T, e)) for e in monomial_basis(2, T)] == [
        "s^2", "s*t", "s*u", "t^2", "t*u", "u^2"]


def test_basis_sizes():
    assert len(monomial_basis((2, 3), TENSOR_VARS)) == 12
    assert len(monomial_basis(5, T)) == 21
    assert len(monomial_basis(-1, T)) == 0


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    assert a * b == b * a


@given(polys(), polys(), st.tuples(coeffs, coeffs, coeffs))
def test_evaluation_is_a_homomorphism(a, b, pt):
    assert evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt)
    assert evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt)


@given(polys(max_deg=3))
@settings(max_examples=40)
def test_interpolation_recovers_polynomial(p):
    assert interpolate(lambda x: evaluate(p, x), T, 3) == p


@given(polys(vars=("X1", "X2", "X3")))
def test_homogenize_round_trip(p):
    deg = max(p.total_degree(), 0)
    h = homogenize(p, deg)
    assert h.is_homogeneous()
    assert dehomogenize(h) == p


def test_primitive_normal_form():
    p = parse_poly("-4*s^2 + 6*s*t", T).scale(Fraction(1, 3))
    assert str(primitive_normal_form(p)) == "2*s^2 - 3*s*t"


def test_surface_validation():
    with pytest.raises(ValueError, match="bidegree"):
        ParamSurface.tensor(1, 1, ["s*t", "s*v", "u*t", "s^2*t"])
    with pytest.raises(ValueError, match="degree"):
        ParamSurface.triangular(2, ["s^2", "t^2", "u^2", "s"])
    with pytest.raises(ValueError, match="zero"):
        ParamSurface.triangular(1, ["s", "t", "u", "0"])


def test_random_surface_is_reproducible():
    a = ParamSurface.random("tensor", (1, 2), random.Random(3))
    b = ParamSurface.random("tensor", (1, 2), random.Random(3))
    assert a == b
    assert all(p.bidegree() == (1, 2) for p in a.x)


def test_image_point_of_bilinear_quadric():
    assert BILINEAR_QUADRIC.image_point((1, 1, 1, 1)) == (2, 1, 1, 3)
