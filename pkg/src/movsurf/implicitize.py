"""Implicitization by moving quadrics, and by the specialized resultant.

The moving-quadric route solves ``MQ^2 T = 0`` for a kernel basis ``T``
whose tail (the ``x4^2`` rows) is an identity block, reads each column
as a moving quadric, and takes the determinant of the square matrix of
quadratic forms ``T~``.  For triangular surfaces the square matrix also
collects the ``n`` moving planes of degree ``n - 1``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exactla import ExactMatrix, PolyMatrix, det, minor, poly_det, solve
from .movmat import (
    build_MP,
    build_MP_I,
    build_MQd,
    build_MSd,
    choose_index_set_I,
    validate_index_set,
)
from .polycore import (
    IMPLICIT_VARS,
    ParamSurface,
    SparsePoly,
    evaluate,
    homogenize,
    order_key,
    primitive_normal_form,
)
from .resultant import BasePointError, specialized_resultant_P, surface_resultant


class MethodHypothesisError(ArithmeticError):
    """The moving-quadric method's hypotheses fail for this surface."""


# row order inside each block of the reordered tableau
QUADRIC_ORDER = (
    (2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2), (1, 1, 0, 0),
    (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1), (0, 0, 1, 1),
)
PLANE_ORDER = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
X4_SQUARED = (0, 0, 0, 2)
X4 = (0, 0, 0, 1)


@dataclass
class KernelTableau:
    """Kernel bases of MQ^2 (and of MP, triangular case) in identity-tail form.

    ``T`` has one row per column of MQ^2 (same order and labels);
    ``ordered`` is ``T`` with rows regrouped by parameter monomial and, in
    each group, by ``QUADRIC_ORDER``.  ``planes``/``planes_ordered`` are the
    triangular moving-plane analogues.
    """

    surface: ParamSurface
    T: ExactMatrix
    ordered: ExactMatrix
    I: tuple | None = None
    planes: ExactMatrix | None = None
    planes_ordered: ExactMatrix | None = None


def _reorder(T: ExactMatrix, monos, gamma_order) -> ExactMatrix:
    pos = {lab: i for i, lab in enumerate(T.row_labels)}
    idx = [pos[(g, mu)] for mu in monos for g in gamma_order]
    return minor(T, idx, range(T.ncols))


def _kernel_with_tail(A: ExactMatrix, square_labels, tail_labels, what: str) -> ExactMatrix:
    """Kernel vectors of ``A`` equal to the unit vectors on ``tail_labels``.

    ``square_labels`` index a nonsingular square column block; all other
    columns get zero coefficients.
    """
    pos = {lab: j for j, lab in enumerate(A.col_labels)}
    Sq = minor(A, range(A.nrows), [pos[l] for l in square_labels])
    R = minor(A, range(A.nrows), [pos[l] for l in tail_labels])
    if not det(Sq):
        raise MethodHypothesisError(f"{what} is singular")
    Y = solve(Sq, ExactMatrix([[-x for x in r] for r in R.rows], R.ncols))
    rows = {lab: Y.rows[i] for i, lab in enumerate(square_labels)}
    for k, lab in enumerate(tail_labels):
        rows[lab] = [Fraction(int(k == j)) for j in range(len(tail_labels))]
    zero = [Fraction(0)] * len(tail_labels)
    return ExactMatrix([rows.get(lab, zero) for lab in A.col_labels], len(tail_labels),
                       row_labels=A.col_labels, col_labels=list(tail_labels))


def kernel_tableau(S: ParamSurface, I=None) -> KernelTableau:
    MQ = build_MQd(S, 2)
    src = S.space(1)
    if S.is_tensor:
        MS = build_MSd(S, 2)
        tail = [(X4_SQUARED, mu) for mu in src]
        T = _kernel_with_tail(MQ, MS.col_labels, tail, "MS^2")
        return KernelTableau(S, T, _reorder(T, src, QUADRIC_ORDER))
    I = choose_index_set_I(S) if I is None else validate_index_set(S, I)
    n = S.degrees[0]
    in_I = {(j, k, n - 1 - j - k) for j, k in I}
    MS = build_MSd(S, 2, I)
    tail = [(X4_SQUARED, mu) for mu in src if mu not in in_I]
    T = _kernel_with_tail(MQ, MS.col_labels, tail, "MS^2_I")
    MP = build_MP(S)
    plane_tail = [(X4, mu) for mu in src if mu in in_I]
    Tp = _kernel_with_tail(MP, build_MP_I(S, I).col_labels, plane_tail, "MP_I")
    return KernelTableau(S, T, _reorder(T, src, QUADRIC_ORDER), I, Tp,
                         _reorder(Tp, src, PLANE_ORDER))


def _forms(T: ExactMatrix, monos, gamma_order) -> list[list[SparsePoly]]:
    """Entry ``(mu, col)`` is ``sum_gamma T[(gamma, mu), col] X^gamma``."""
    pos = {lab: i for i, lab in enumerate(T.row_labels)}
    out = []
    for mu in monos:
        row = []
        for c in range(T.ncols):
            terms = {g: T.rows[pos[(g, mu)]][c] for g in gamma_order}
            row.append(SparsePoly(IMPLICIT_VARS, terms))
        out.append(row)
    return out


def build_Ttilde(K: KernelTableau) -> PolyMatrix:
    """Square matrix of the moving quadrics' (and planes') coefficient forms.

    Rows are indexed by parameter monomials in the fixed order, columns by
    kernel vectors; triangular surfaces append the plane columns.
    """
    src = K.surface.space(1)
    rows = _forms(K.T, src, QUADRIC_ORDER)
    if K.planes is not None:
        planes = _forms(K.planes, src, PLANE_ORDER)
        rows = [r + p for r, p in zip(rows, planes)]
    return PolyMatrix(rows)


def _block_product(ordered: ExactMatrix, nblocks: int, C: list[SparsePoly]) -> PolyMatrix:
    """``M . ordered`` with ``M`` block upper triangular, every block equal to the row ``C``."""
    w = len(C)
    block_forms = []
    for k in range(nblocks):
        row = []
        for c in range(ordered.ncols):
            acc = SparsePoly.zero(IMPLICIT_VARS)
            for g, Cg in enumerate(C):
                a = ordered.rows[k * w + g][c]
                if a:
                    acc = acc + Cg.scale(a)
            row.append(acc)
        block_forms.append(row)
    rows = []
    for r in range(nblocks):
        row = []
        for c in range(ordered.ncols):
            acc = SparsePoly.zero(IMPLICIT_VARS)
            for k in range(r, nblocks):
                acc = acc + block_forms[k][c]
            row.append(acc)
        rows.append(row)
    return PolyMatrix(rows)


def C_vector(order) -> list[SparsePoly]:
    return [SparsePoly.monomial(IMPLICIT_VARS, g) for g in order]


def build_MT_product(K: KernelTableau) -> PolyMatrix:
    """The product of the block matrix of C rows with the reordered tableau (tensor case)."""
    if K.planes is not None:
        raise ValueError("triangular tableaux use build_combined_product")
    return _block_product(K.ordered, len(K.surface.space(1)), C_vector(QUADRIC_ORDER))


def build_combined_product(K: KernelTableau) -> PolyMatrix:
    """``[M . T, M' . T']`` for a triangular tableau."""
    if K.planes is None:
        raise ValueError("tensor tableaux use build_MT_product")
    nb = len(K.surface.space(1))
    A = _block_product(K.ordered, nb, C_vector(QUADRIC_ORDER))
    B = _block_product(K.planes_ordered, nb, C_vector(PLANE_ORDER))
    return PolyMatrix([ra + rb for ra, rb in zip(A.rows, B.rows)])


def tableau_degree(K: KernelTableau) -> int:
    """Degree of the determinant of ``T~``: two per quadric column, one per plane column."""
    planes = K.planes.ncols if K.planes is not None else 0
    return 2 * K.T.ncols + planes


# power extraction --------------------------------------------------------

def _kth_root(F: SparsePoly, k: int) -> SparsePoly | None:
    """Exact ``G`` with ``G^k = F`` and positive leading coefficient, or None."""
    exp, c = F.leading_term()
    if any(e % k for e in exp):
        return None
    root_c = _rational_root(c, k)
    if root_c is None:
        return None
    g0 = (tuple(e // k for e in exp), root_c)
    G = SparsePoly.monomial(F.vars, *g0)
    denom = G ** (k - 1) * k
    dexp, dc = denom.leading_term()
    last = g0[0]
    ndeg = sum(exp) // k
    for _ in range(10 ** 5):
        R = F - G ** k
        if not R:
            return G
        rexp, rc = R.leading_term()
        nexp = tuple(a - b for a, b in zip(rexp, dexp))
        if any(a < 0 for a in nexp) or sum(nexp) != ndeg or not (order_key(nexp) < order_key(last)):
            return None
        last = nexp
        G = G + SparsePoly.monomial(F.vars, nexp, rc / dc)
    return None


def _rational_root(c: Fraction, k: int) -> Fraction | None:
    def iroot(a: int) -> int | None:
        if a < 0:
            if k % 2 == 0:
                return None
            r = iroot(-a)
            return None if r is None else -r
        r = round(a ** (1.0 / k)) if a < 2 ** 1000 else int(a ** (1.0 / k))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand ** k == a:
                return cand
        lo, hi = 0, a + 1
        while lo < hi:
            mid = (lo + hi) // 2
            if mid ** k < a:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo ** k == a else None

    num, den = iroot(c.numerator), iroot(c.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def extract_power(F: SparsePoly) -> tuple[SparsePoly, int]:
    """Write ``F = G^k`` with ``k`` as large as possible (``G`` in primitive normal form)."""
    F = primitive_normal_form(F)
    D = F.total_degree()
    for k in range(D, 1, -1):
        if D % k:
            continue
        G = _kth_root(F, k)
        if G is not None:
            return primitive_normal_form(G), k
    return F, 1


# results -----------------------------------------------------------------

@dataclass
class ImplicitResult:
    F: SparsePoly
    method: str
    root: SparsePoly
    power: int
    determinant: SparsePoly | None = None
    resultant: Fraction | None = None
    checks: dict = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return self.F.total_degree()


def implicit_moving_quadrics(S: ParamSurface, I=None, verify: bool = True) -> ImplicitResult:
    """Implicit equation as ``|T~|``; optionally checks ``Res |M.T| = +-P^h``.

    Raises :class:`MethodHypothesisError` when the resultant of ``x1, x2, x3``
    vanishes or the relevant square matrices are singular.
    """
    res = surface_resultant(S)
    if not res:
        if not specialized_resultant_P(S):
            raise BasePointError("base points detected: the specialized resultant vanishes identically")
        raise MethodHypothesisError("Res(x1, x2, x3) = 0; use the direct resultant route")
    K = kernel_tableau(S, I)
    Tt = build_Ttilde(K)
    D = poly_det(Tt, tableau_degree(K))
    if not D:
        raise MethodHypothesisError("det(T~) vanishes identically")
    F = primitive_normal_form(D)
    G, k = extract_power(F)
    out = ImplicitResult(F, "moving-quadrics", G, k, determinant=D, resultant=res)
    if verify:
        prod = build_MT_product(K) if S.is_tensor else build_combined_product(K)
        Dm = poly_det(prod, tableau_degree(K))
        P = specialized_resultant_P(S)
        Ph = homogenize(P, P.total_degree())
        lhs = Dm.scale(res)
        out.checks["det(T~) = +-det(M.T)"] = D == Dm or D == -Dm
        out.checks["Res * det(M.T) = +-P^h"] = lhs == Ph or lhs == -Ph
    return out


def implicit_direct_resultant(S: ParamSurface) -> ImplicitResult:
    """Implicit equation as the homogenized specialized resultant."""
    P = specialized_resultant_P(S)
    if not P:
        raise BasePointError("base points detected: the specialized resultant vanishes identically")
    F = primitive_normal_form(homogenize(P, P.total_degree()))
    G, k = extract_power(F)
    return ImplicitResult(F, "direct-resultant", G, k, resultant=P.coeff((0, 0, 0)))


@dataclass
class ValidationReport:
    trials: int
    zeros: int
    nonzero_points: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.zeros == self.trials


def validate_on_surface(F: SparsePoly, S: ParamSurface, trials: int = 25,
                        seed: int = 0) -> ValidationReport:
    """Evaluate ``F`` at the images of ``trials`` random rational parameter points."""
    if not F:
        raise ValueError("the zero polynomial is not an implicit equation")
    if not F.is_homogeneous():
        raise ValueError("F must be homogeneous in X1..X4")
    rng = random.Random(seed)
    zeros = 0
    bad = []
    for _ in range(trials):
        params = [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in S.vars]
        img = S.image_point(params)
        if evaluate(F, img) == 0:
            zeros += 1
        else:
            bad.append(tuple(params))
    return ValidationReport(trials, zeros, bad)
