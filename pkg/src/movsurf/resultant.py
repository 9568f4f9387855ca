"""Resultants of three forms by three independent routes.

* Koszul: the determinant of the exact complex
  ``0 -> A --D0--> B --D1--> C -> 0`` built from ``x1, x2, x3^(d-1)``, as a
  signed ratio of complementary maximal minors.  At ``d = 2`` this is the
  resultant itself and is the definition used throughout the package.
* Dixon (tensor case) and Macaulay (triangular case) matrices, used as
  oracles.

All routes agree up to sign.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactla import ExactMatrix, det, minor, pivot_columns
from .movmat import linear_map_matrix
from .polycore import (
    AFFINE_VARS,
    TENSOR_VARS,
    TRIANGULAR_VARS,
    MonomialBasis,
    ParamSurface,
    SparsePoly,
    evaluate,
    homogeneous_exponents,
    interpolate,
    monomial_basis,
)


class ResultantVanishes(ArithmeticError):
    """Every maximal minor of D1 vanishes: the forms have a common root."""


class BasePointError(ArithmeticError):
    """The parametrization has base points; resultant-based methods do not apply."""


@dataclass(frozen=True)
class KoszulPair:
    D0: ExactMatrix
    D1: ExactMatrix
    d: int
    case: str


def _case_and_degrees(polys: Sequence[SparsePoly], case: str | None = None):
    vars = polys[0].vars
    if any(p.vars != vars for p in polys):
        raise ValueError("forms must share a variable set")
    if case is None:
        case = "tensor" if vars == TENSOR_VARS else "triangular"
    if case == "tensor":
        degs = {p.bidegree() for p in polys if p}
        if len(degs) != 1:
            raise ValueError(f"forms have mismatched bidegrees {sorted(degs)}")
        return case, degs.pop()
    if vars != TRIANGULAR_VARS:
        raise ValueError("triangular forms must be polynomials in s,t,u")
    degs = {p.homogeneous_degree() for p in polys if p}
    if len(degs) != 1:
        raise ValueError(f"forms have mismatched degrees {sorted(degs)}")
    return case, (degs.pop(),)


def _space(case: str, degrees, k: int) -> MonomialBasis:
    if case == "tensor":
        m, n = degrees
        return monomial_basis((k * m - 1, k * n - 1), TENSOR_VARS)
    return monomial_basis(k * degrees[0] - 1, TRIANGULAR_VARS)


def koszul_matrices(f1: SparsePoly, f2: SparsePoly, f3: SparsePoly, d: int = 2,
                    case: str | None = None) -> KoszulPair:
    """Matrices of the Koszul maps built from ``f1, f2, f3^(d-1)``.

    ``D1(p, q, r) = p f1 + q f2 + r f3^(d-1)`` and
    ``D0(p, q, r) = (q f3^(d-1) + r f2, p f3^(d-1) - r f1, -p f2 - q f1)``.
    """
    if d < 2:
        raise ValueError("the Koszul complex needs d >= 2")
    case, degs = _case_and_degrees([f1, f2, f3], case)
    g = f3 ** (d - 1)
    top = _space(case, degs, d)      # p, q in the middle term
    mid = _space(case, degs, 2)      # r in the middle term
    low = _space(case, degs, 1)      # p, q in the first term
    low_r = _space(case, degs, d - 1)
    target = _space(case, degs, d + 1)
    D1 = linear_map_matrix(
        [("p", top, [(0, f1)]), ("q", top, [(0, f2)]), ("r", mid, [(0, g)])],
        [("target", target)],
    )
    D0 = linear_map_matrix(
        [
            ("p", low, [(1, g), (2, -f2)]),
            ("q", low, [(0, g), (2, -f1)]),
            ("r", low_r, [(0, f2), (1, -f1)]),
        ],
        [("p", top), ("q", top), ("r", mid)],
    )
    return KoszulPair(D0, D1, d, case)


def permutation_parity(I: Sequence[int], q: int) -> int:
    """Parity of the permutation ``(i_1..i_r, complement ascending)`` of ``range(q)``."""
    I = sorted(I)
    return sum(i - k for k, i in enumerate(I)) % 2


def signed_minors(K: KoszulPair, I: Sequence[int]) -> tuple[Fraction, Fraction, int]:
    """``(m1, m0, sigma)``: the D1 minor on columns ``I``, the D0 minor on the other rows, and the parity."""
    I = sorted(I)
    q = K.D1.ncols
    comp = [i for i in range(q) if i not in set(I)]
    m1 = det(minor(K.D1, range(K.D1.nrows), I))
    m0 = det(minor(K.D0, comp, range(K.D0.ncols)))
    return m1, m0, permutation_parity(I, q)


def valid_index_set(K: KoszulPair, order: Sequence[int] | None = None) -> list[int]:
    """Columns of a nonsingular maximal minor of D1, chosen greedily.

    Scanning columns left to right gives the first such set in
    colexicographic order; other scan orders give other valid sets.
    """
    piv = pivot_columns(K.D1, order)
    if len(piv) < K.D1.nrows:
        raise ResultantVanishes("all maximal minors of D1 vanish")
    return sorted(piv)


def complex_determinant(K: KoszulPair, I: Sequence[int] | None = None) -> Fraction:
    """Determinant of the Koszul complex, ``(-1)^sigma m1 / m0``; equals +-Res^(d-1)."""
    if I is None:
        I = valid_index_set(K)
    m1, m0, sigma = signed_minors(K, I)
    if not m1:
        raise ResultantVanishes("chosen minor of D1 vanishes")
    if not m0:
        raise ArithmeticError("complementary minor of D0 vanishes although m1 != 0")
    value = m1 / m0
    return -value if sigma else value


def res_koszul(f1: SparsePoly, f2: SparsePoly, f3: SparsePoly, case: str | None = None) -> Fraction:
    try:
        return complex_determinant(koszul_matrices(f1, f2, f3, 2, case))
    except ResultantVanishes:
        return Fraction(0)


def res_bihom(f1: SparsePoly, f2: SparsePoly, f3: SparsePoly) -> Fraction:
    """Bihomogeneous resultant of three bidegree (m, n) forms, via the d = 2 complex."""
    return res_koszul(f1, f2, f3, "tensor")


def res_tri(f1: SparsePoly, f2: SparsePoly, f3: SparsePoly) -> Fraction:
    """Resultant of three ternary forms of degree n, via the d = 2 complex."""
    return res_koszul(f1, f2, f3, "triangular")


# Dixon -------------------------------------------------------------------

DIXON_VARS = ("s", "t", "a", "b")


def _divided_difference(p: SparsePoly, i: int, j: int) -> SparsePoly:
    """``(p - p|_{x_i -> x_j}) / (x_i - x_j)`` for p free of ``x_j``."""
    out: dict = {}
    for e, c in p.terms.items():
        k = e[i]
        for a in range(k):
            ne = list(e)
            ne[i] = a
            ne[j] = e[j] + k - 1 - a
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + c
    return SparsePoly(p.vars, out)


def _rename_var(p: SparsePoly, i: int, j: int) -> SparsePoly:
    out = {}
    for e, c in p.terms.items():
        ne = list(e)
        ne[j] += ne[i]
        ne[i] = 0
        out[tuple(ne)] = out.get(tuple(ne), 0) + c
    return SparsePoly(p.vars, out)


def _det3(m: list[list[SparsePoly]]) -> SparsePoly:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def dixon_polynomial(f1: SparsePoly, f2: SparsePoly, f3: SparsePoly) -> SparsePoly:
    """Cayley-Dixon quotient in ``s, t, a, b`` of three bidegree (m, n) forms (affine u = v = 1)."""
    _case_and_degrees([f1, f2, f3], "tensor")
    rows0 = []
    for f in (f1, f2, f3):
        aff = f.substitute({"u": 1, "v": 1})
        # (s, u, t, v) exponents -> (s, t, a, b)
        rows0.append(SparsePoly(DIXON_VARS, {(e[0], e[2], 0, 0): c for e, c in aff.terms.items()}))
    row1 = [_divided_difference(f, 0, 2) for f in rows0]            # (f(s,t) - f(a,t)) / (s - a)
    f_at = [_rename_var(f, 0, 2) for f in rows0]                     # f(a, t)
    row2 = [_divided_difference(f, 1, 3) for f in f_at]              # (f(a,t) - f(a,b)) / (t - b)
    row3 = [_rename_var(f, 1, 3) for f in f_at]                      # f(a, b)
    return _det3([row1, row2, row3])


def dixon_matrix(f1: SparsePoly, f2: SparsePoly, f3: SparsePoly) -> ExactMatrix:
    """The ``2mn x 2mn`` Dixon matrix; rows ``s^i t^j`` (i<m, j<2n), columns ``a^k b^l`` (k<2m, l<n)."""
    _, (m, n) = _case_and_degrees([f1, f2, f3], "tensor")
    delta = dixon_polynomial(f1, f2, f3)
    rows = [(i, j) for i in range(m - 1, -1, -1) for j in range(2 * n - 1, -1, -1)]
    cols = [(k, l) for k in range(2 * m - 1, -1, -1) for l in range(n - 1, -1, -1)]
    ri = {r: x for x, r in enumerate(rows)}
    ci = {c: x for x, c in enumerate(cols)}
    M = [[Fraction(0)] * len(cols) for _ in rows]
    for e, c in delta.terms.items():
        r, k = (e[0], e[1]), (e[2], e[3])
        if r not in ri or k not in ci:
            raise ArithmeticError(f"Dixon polynomial has a term outside the expected support: {e}")
        M[ri[r]][ci[k]] += c
    return ExactMatrix(M, len(cols), row_labels=rows, col_labels=cols)


def res_dixon(f1: SparsePoly, f2: SparsePoly, f3: SparsePoly) -> Fraction:
    return det(dixon_matrix(f1, f2, f3))


# Macaulay ----------------------------------------------------------------

def _macaulay_pair(polys: Sequence[SparsePoly], n: int) -> tuple[ExactMatrix, list[int]]:
    """Macaulay matrix in degree 3n-2 and the row/column indices of its extraneous minor.

    Row ``mu`` is ``(mu / x_i^n) f_i`` for the first variable ``x_i`` whose
    ``n``-th power divides ``mu``; rows are the coefficient vectors.
    """
    D = 3 * n - 2
    mons = homogeneous_exponents(3, D)
    index = {m: k for k, m in enumerate(mons)}
    rows = []
    reduced_rows = []
    for k, mu in enumerate(mons):
        divisible = [i for i in range(3) if mu[i] >= n]
        i = divisible[0]
        if len(divisible) > 1:
            reduced_rows.append(k)
        shift = list(mu)
        shift[i] -= n
        row = [Fraction(0)] * len(mons)
        for e, c in polys[i].shift(tuple(shift)).terms.items():
            row[index[e]] += c
        rows.append(row)
    return ExactMatrix(rows, len(mons)), reduced_rows


def _charpoly_coeffs(A: ExactMatrix) -> list[Fraction]:
    """Coefficients (constant first) of ``det(A - e I)`` as a polynomial in ``e``."""
    N = A.nrows
    vals = []
    for k in range(N + 1):
        shifted = ExactMatrix([[x - (k if i == j else 0) for j, x in enumerate(r)]
                               for i, r in enumerate(A.rows)], N)
        vals.append(det(shifted))
    P = interpolate(lambda pt: vals[pt[0]], ("e",), N, base=0)
    return [P.coeff((k,)) for k in range(N + 1)]


def _poly_divide(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / den[-1]
        q[k] = c
        for j, dj in enumerate(den):
            num[k + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact division of characteristic polynomials")
    return q


def macaulay_res(f1: SparsePoly, f2: SparsePoly, f3: SparsePoly) -> Fraction:
    """Resultant of three ternary forms as ``det(M) / det(M')``.

    When the extraneous minor vanishes for every variable order, falls back
    to the constant term of the perturbed quotient
    ``det(M - eI) / det(M' - eI)``.
    """
    _, (n,) = _case_and_degrees([f1, f2, f3], "triangular")
    polys = [f1, f2, f3]
    first = None
    for perm in itertools.permutations(range(3)):
        permuted = [SparsePoly(TRIANGULAR_VARS, {tuple(e[p] for p in perm): c
                                                 for e, c in f.terms.items()}) for f in polys]
        M, red = _macaulay_pair(permuted, n)
        Mp = minor(M, red, red)
        if first is None:
            first = (M, Mp)
        dp = det(Mp)
        if dp:
            return det(M) / dp
    M, Mp = first
    q = _poly_divide(_charpoly_coeffs(M), _charpoly_coeffs(Mp))
    return q[0]


# specialized resultant ---------------------------------------------------

def specialized_polys(S: ParamSurface, X: Sequence) -> tuple[SparsePoly, SparsePoly, SparsePoly]:
    """``x_i - X_i x4`` for ``i = 1, 2, 3`` at a point ``X``."""
    x4 = S.x[3]
    return tuple(S.x[i] - x4.scale(X[i]) for i in range(3))


def surface_resultant(S: ParamSurface, X: Sequence = (0, 0, 0)) -> Fraction:
    f = specialized_polys(S, X)
    return res_bihom(*f) if S.is_tensor else res_tri(*f)


def specialized_resultant_P(S: ParamSurface, checks: int = 3, seed: int = 0,
                            max_degree: int | None = None) -> SparsePoly:
    """``P(X1,X2,X3) = Res(x1 - X1 x4, x2 - X2 x4, x3 - X3 x4)`` by interpolation.

    The degree bound starts at the expected implicit degree (2mn, or n^2
    in the triangular case) and grows until ``checks`` held-out points agree.
    """
    if S.is_tensor:
        m, n = S.degrees
        start, cap = 2 * m * n, 6 * m * n
    else:
        n = S.degrees[0]
        start, cap = n * n, 3 * n * n
    if max_degree is not None:
        cap = max_degree
    rng = random.Random(seed)
    held_out = [tuple(rng.randint(-30, 30) for _ in range(3)) for _ in range(checks)]
    expected = [surface_resultant(S, pt) for pt in held_out]
    values: dict = {}

    def f(pt):
        if pt not in values:
            values[pt] = surface_resultant(S, pt)
        return values[pt]

    for D in range(start, cap + 1):
        P = interpolate(f, AFFINE_VARS, D)
        if all(evaluate(P, pt) == v for pt, v in zip(held_out, expected)):
            return P
    raise ArithmeticError(f"specialized resultant exceeds the degree bound {cap}")
