import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from movsurf.exactla import (
    DegreeBoundError,
    ExactMatrix,
    PolyMatrix,
    det,
    minor,
    nullspace,
    pivot_columns,
    poly_det,
    rank,
    solve,
)
from movsurf.polycore import IMPLICIT_VARS, parse_poly


def leibniz_det(rows):
    """Independent oracle: permutation expansion."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = Fraction(1)
        for i, j in enumerate(perm):
            prod *= rows[i][j]
        total += -prod if inv % 2 else prod
    return total


entries = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def square(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)


@given(st.integers(1, 5).flatmap(square))
@settings(max_examples=60)
def test_det_matches_permutation_expansion(rows):
    assert det(ExactMatrix(rows)) == leibniz_det(rows)


@given(square(4), square(4))
@settings(max_examples=30)
def test_det_is_multiplicative(a, b):
    A, B = ExactMatrix(a), ExactMatrix(b)
    assert det(A @ B) == det(A) * det(B)


@given(st.lists(st.lists(entries, min_size=5, max_size=5), min_size=1, max_size=4))
@settings(max_examples=60)
def test_nullspace_is_kernel_and_rank_nullity(rows):
    A = ExactMatrix(rows)
    K = nullspace(A)
    assert len(K) + rank(A) == A.ncols
    for v in K:
        assert all(x == 0 for x in A.apply(v))


def test_empty_and_singular():
    assert det(ExactMatrix([], 0)) == 1
    assert det(ExactMatrix([[1, 2], [2, 4]])) == 0
    with pytest.raises(ValueError):
        det(ExactMatrix([[1, 2, 3]]))


def test_pivot_columns_greedy_in_order():
    A = ExactMatrix([[1, 1, 0], [0, 0, 1]])
    assert pivot_columns(A) == [0, 2]
    assert pivot_columns(A, [1, 0, 2]) == [1, 2]


def test_minor_and_solve():
    A = ExactMatrix([[2, 1], [1, 3]])
    X = solve(A, ExactMatrix([[3], [5]]))
    assert X.rows == [[Fraction(4, 5)], [Fraction(7, 5)]]
    assert minor(A, [1], [0]).rows == [[1]]
    with pytest.raises(ValueError):
        minor(A, [0, 0], [0])


def test_poly_det_matches_symbolic_expansion():
    P = lambda s: parse_poly(s, IMPLICIT_VARS)
    M = PolyMatrix([[P("X1"), P("X2+X4")], [P("X3"), P("X1-X4")]])
    assert poly_det(M, 2) == P("X1^2 - X1*X4 - X2*X3 - X3*X4")


def test_poly_det_detects_low_bound():
    P = lambda s: parse_poly(s, IMPLICIT_VARS)
    M = PolyMatrix([[P("X1^2"), P("X2")], [P("X3"), P("X4^2")]])
    with pytest.raises(DegreeBoundError):
        poly_det(M, 2)
