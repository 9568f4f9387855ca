"""Coefficient matrices of moving planes, quadrics and d-surfaces.

Every matrix here is the matrix of a map ``(p_b)_b -> sum_b p_b * g_b`` in
monomial bases: rows follow the fixed order of the target space, columns
run block by block (one block per multiplier ``g_b``) with the source
monomials inside each block in the fixed order.  Columns carry labels
``(block, monomial)``, rows carry the target monomial.

Gamma sets (exponent vectors ``gamma`` with ``|gamma| = d``) are ordered
lexicographically descending, so blocks involving ``x1`` come first and
``x4^d`` comes last.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass
from typing import Sequence

from .exactla import ExactMatrix, det, minor, nullspace, rank
from .polycore import (
    IMPLICIT_VARS,
    MonomialBasis,
    ParamSurface,
    SparsePoly,
    homogeneous_exponents,
    monomial_basis,
)

Gamma = tuple[int, int, int, int]
IndexSet = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GammaSet:
    d: int
    all: tuple[Gamma, ...]
    gamma0: tuple[Gamma, ...]
    gamma1: tuple[Gamma, ...]
    gamma4: tuple[Gamma, ...]


def gamma_sets(d: int) -> GammaSet:
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    full = tuple(homogeneous_exponents(4, d))
    g0 = tuple(g for g in full if g[3] <= 1)
    g1 = tuple(g for g in g0 if g[0] == 0)
    g4 = tuple(g for g in g0 if g[3] == 0)
    return GammaSet(d, full, g0, g1, g4)


def gamma_name(g: Gamma) -> str:
    parts = []
    for i, k in enumerate(g, 1):
        if k == 1:
            parts.append(f"x{i}")
        elif k > 1:
            parts.append(f"x{i}^{k}")
    return "*".join(parts) or "1"


def block_label_name(label) -> str:
    if isinstance(label, tuple) and len(label) == 4 and all(isinstance(a, int) for a in label):
        return gamma_name(label)
    return str(label)


@lru_cache(maxsize=4096)
def xpow(S: ParamSurface, g: tuple[int, ...]) -> SparsePoly:
    """``x1^g1 * x2^g2 * x3^g3 * x4^g4`` for the surface's forms."""
    p = SparsePoly.constant(S.vars, 1)
    for xi, k in zip(S.x, g):
        if k:
            p = p * xi ** k
    return p


def linear_map_matrix(
    sources: Sequence[tuple[object, Sequence, Sequence[tuple[int, SparsePoly]]]],
    targets: Sequence[tuple[object, MonomialBasis]],
) -> ExactMatrix:
    """Matrix of a block map between direct sums of monomial spaces.

    ``sources`` lists ``(label, monomials, [(target_block, multiplier), ...])``;
    the column for monomial ``mu`` of that block is ``mu * multiplier`` placed
    in each listed target block.  ``targets`` lists ``(label, basis)``.
    """
    offsets = []
    total = 0
    for _, basis in targets:
        offsets.append(total)
        total += len(basis)
    cols = []
    col_labels = []
    for label, monos, images in sources:
        for mu in monos:
            col = [0] * total
            for t, mult in images:
                basis = targets[t][1]
                for e, c in mult.shift(mu).terms.items():
                    try:
                        col[offsets[t] + basis.index(e)] += c
                    except KeyError:
                        raise ValueError(f"product leaves the target space: {e}") from None
            cols.append(col)
            col_labels.append((label, tuple(mu)))
    if len(targets) == 1:
        row_labels = list(targets[0][1])
    else:
        row_labels = [(lab, m) for lab, basis in targets for m in basis]
    return ExactMatrix.from_columns(cols, total, row_labels=row_labels, col_labels=col_labels)


# index sets for the triangular case --------------------------------------

def _pair_monomial(S: ParamSurface, pair: tuple[int, int]) -> tuple[int, int, int]:
    n = S.degrees[0]
    j, k = pair
    if j < 0 or k < 0 or j + k > n - 1:
        raise ValueError(f"index pair {pair} is not an exponent of a degree {n - 1} monomial")
    return (j, k, n - 1 - j - k)


def validate_index_set(S: ParamSurface, I) -> IndexSet:
    if S.is_tensor:
        raise ValueError("index sets only apply to triangular surfaces")
    n = S.degrees[0]
    I = tuple(sorted(tuple(p) for p in I))
    if len(set(I)) != len(I) or len(I) != n:
        raise ValueError(f"index set must hold {n} distinct pairs, got {I}")
    for p in I:
        _pair_monomial(S, p)
    return I


def index_set_candidates(S: ParamSurface) -> list[IndexSet]:
    """All n-element index sets, in lexicographic order of sorted ``(j, k)`` pairs."""
    n = S.degrees[0]
    pairs = sorted((j, k) for j in range(n) for k in range(n - j))
    return [tuple(c) for c in itertools.combinations(pairs, n)]


def _removed_monomials(S: ParamSurface, I) -> set:
    return {_pair_monomial(S, p) for p in I}


# builders ----------------------------------------------------------------

def _target(S: ParamSurface, k: int) -> list[tuple[object, MonomialBasis]]:
    return [("target", S.space(k))]


def build_MP(S: ParamSurface) -> ExactMatrix:
    """Moving-plane matrix of ``(p1..p4) -> sum p_i x_i``."""
    src = S.space(1)
    sources = [(g, src, [(0, xpow(S, g))]) for g in gamma_sets(1).all]
    return linear_map_matrix(sources, _target(S, 2))


def build_MP_I(S: ParamSurface, I) -> ExactMatrix:
    """Square triangular moving-plane matrix with the ``x4`` columns of ``I`` removed."""
    I = validate_index_set(S, I)
    removed = _removed_monomials(S, I)
    src = S.space(1)
    sources = []
    for g in gamma_sets(1).all:
        monos = [mu for mu in src if not (g[3] == 1 and mu in removed)]
        sources.append((g, monos, [(0, xpow(S, g))]))
    return linear_map_matrix(sources, _target(S, 2))


def build_MQd(S: ParamSurface, d: int) -> ExactMatrix:
    """Matrix of ``(p_gamma) -> sum p_gamma x^gamma`` over all ``|gamma| = d``."""
    src = S.space(1)
    sources = [(g, src, [(0, xpow(S, g))]) for g in gamma_sets(d).all]
    return linear_map_matrix(sources, _target(S, d + 1))


def build_MSd(S: ParamSurface, d: int, I=None) -> ExactMatrix:
    """Restriction of the MQ^d map to ``gamma4 <= 1``.

    For triangular surfaces an index set ``I`` removes the columns
    ``mu * x^gamma`` with ``mu`` in ``I`` and ``gamma4 = 1``, which makes the
    matrix square; without ``I`` the full rectangular matrix is returned.
    """
    gs = gamma_sets(d)
    src = S.space(1)
    removed = set()
    if I is not None:
        removed = _removed_monomials(S, validate_index_set(S, I))
    sources = []
    for g in gs.gamma0:
        monos = [mu for mu in src if not (g[3] == 1 and mu in removed)]
        sources.append((g, monos, [(0, xpow(S, g))]))
    return linear_map_matrix(sources, _target(S, d + 1))


def build_MTd(S: ParamSurface, d: int, I=None) -> ExactMatrix:
    """Matrix of ``(q, (p_gamma)_{Gamma1}) -> q x1 + sum p_gamma x^gamma``.

    The ``q`` block (degree ``dm-1, dn-1``) comes first so that the d = 1
    matrix coincides with MP column for column.
    """
    gs = gamma_sets(d)
    src = S.space(1)
    removed = set()
    if I is not None:
        removed = _removed_monomials(S, validate_index_set(S, I))
    elif not S.is_tensor:
        raise ValueError("triangular MT^d needs an index set I")
    sources = [("q", S.space(d), [(0, S.x[0])])]
    for g in gs.gamma1:
        monos = [mu for mu in src if not (g[3] == 1 and mu in removed)]
        sources.append((g, monos, [(0, xpow(S, g))]))
    return linear_map_matrix(sources, _target(S, d + 1))


def moving_surface_matrix(S: ParamSurface, d: int, sigma) -> ExactMatrix:
    """Coefficient matrix of moving d-surfaces of (bi)degree ``sigma``."""
    if S.is_tensor:
        s1, s2 = sigma
        if s1 < 0 or s2 < 0:
            raise ValueError("sigma must be non-negative")
        m, n = S.degrees
        src = monomial_basis((s1, s2), S.vars)
        tgt = monomial_basis((s1 + d * m, s2 + d * n), S.vars)
    else:
        sigma = sigma[0] if isinstance(sigma, tuple) else sigma
        if sigma < 0:
            raise ValueError("sigma must be non-negative")
        src = monomial_basis(sigma, S.vars)
        tgt = monomial_basis(sigma + d * S.degrees[0], S.vars)
    sources = [(g, src, [(0, xpow(S, g))]) for g in gamma_sets(d).all]
    return linear_map_matrix(sources, [("target", tgt)])


def moving_space_basis(S: ParamSurface, d: int, sigma) -> list[SparsePoly]:
    """Basis of the moving d-surfaces of (bi)degree ``sigma`` following ``S``.

    Each basis element is returned as a polynomial in the parameters and
    ``X1..X4``, e.g. ``X1*u*v - X4*u*v + ...``; the basis is the RREF kernel of
    :func:`moving_surface_matrix`.
    """
    A = moving_surface_matrix(S, d, sigma)
    vars = S.vars + IMPLICIT_VARS
    np_ = len(S.vars)
    out = []
    for vec in nullspace(A):
        terms = {}
        for (g, mu), c in zip(A.col_labels, vec):
            if c:
                terms[tuple(mu) + tuple(g)] = c
        out.append(SparsePoly(vars, terms))
    return out


def choose_index_set_I(S: ParamSurface) -> IndexSet:
    """First index set (lexicographic order) with ``|MP_I| != 0``."""
    for I in index_set_candidates(S):
        if det(build_MP_I(S, I)):
            return I
    raise ValueError(
        f"MP has rank {rank(build_MP(S))} < {len(S.space(2))}: no nonsingular MP_I exists "
        "(the surface follows extra moving planes of degree n-1)"
    )


def valid_index_sets(S: ParamSurface) -> list[IndexSet]:
    return [I for I in index_set_candidates(S) if det(build_MP_I(S, I))]


def columns_by_label(A: ExactMatrix, labels: Sequence) -> ExactMatrix:
    """Columns of ``A`` selected by label, in the given order."""
    pos = {lab: j for j, lab in enumerate(A.col_labels)}
    return minor(A, range(A.nrows), [pos[lab] for lab in labels])
