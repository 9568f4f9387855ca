"""Exact dense linear algebra over the rationals.

Entries are stored as :class:`Fraction`.  Determinants and ranks run on
integer matrices (rows are scaled to clear denominators) with the
fraction-free Bareiss recurrence; kernels come out in reduced row-echelon
normal form so they are reproducible.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .polycore import IMPLICIT_VARS, SparsePoly, evaluate, interpolate


class ExactMatrix:
    """Dense rational matrix with optional row and column labels."""

    __slots__ = ("rows", "ncols", "row_labels", "col_labels")

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None,
                 row_labels: Sequence | None = None, col_labels: Sequence | None = None):
        self.rows = [[Fraction(x) for x in r] for r in rows]
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        if row_labels is not None and len(row_labels) != len(self.rows):
            raise ValueError("row labels do not match the number of rows")
        if col_labels is not None and len(col_labels) != ncols:
            raise ValueError("column labels do not match the number of columns")
        self.row_labels = list(row_labels) if row_labels is not None else None
        self.col_labels = list(col_labels) if col_labels is not None else None

    @classmethod
    def zeros(cls, nrows: int, ncols: int, **labels) -> ExactMatrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols, **labels)

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int, **labels) -> ExactMatrix:
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols), **labels)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def is_square(self) -> bool:
        return len(self.rows) == self.ncols

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> list[Fraction]:
        return [r[j] for r in self.rows]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(
            [self.column(j) for j in range(self.ncols)], len(self.rows),
            row_labels=self.col_labels, col_labels=self.row_labels,
        )

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * c[k] for k, a in nz), Fraction(0)) for c in cols])
        return ExactMatrix(out, other.ncols, row_labels=self.row_labels,
                           col_labels=other.col_labels)

    def apply(self, vec: Sequence) -> list[Fraction]:
        return [sum((a * Fraction(b) for a, b in zip(r, vec) if a), Fraction(0)) for r in self.rows]

    def scale_column(self, j: int, c) -> ExactMatrix:
        rows = [list(r) for r in self.rows]
        for r in rows:
            r[j] *= c
        return ExactMatrix(rows, self.ncols, self.row_labels, self.col_labels)

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.shape == other.shape and self.rows == other.rows

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols})"

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


# integer kernels ---------------------------------------------------------

def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; returns the rows and the product of the scale factors."""
    out = []
    scale = Fraction(1)
    for r in rows:
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (x.denominator for x in r), 1)
        out.append([int(x * den) for x in r])
        scale *= den
    return out, scale


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    m = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pk * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def _pivot_columns_int(m: list[list[int]], ncols: int, order: Sequence[int] | None = None) -> list[int]:
    """Greedy pivot columns (fraction-free echelon form), scanning columns in ``order``."""
    m = [list(r) for r in m]
    nrows = len(m)
    order = list(range(ncols)) if order is None else list(order)
    pivots = []
    row = 0
    prev = 1
    for c in order:
        if row == nrows:
            break
        piv = next((i for i in range(row, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pk = m[row][c]
        rk = m[row]
        for i in range(row + 1, nrows):
            ri = m[i]
            a = ri[c]
            for j in order:
                ri[j] = (pk * ri[j] - a * rk[j]) // prev
        prev = pk
        pivots.append(c)
        row += 1
    return pivots


# public operations -------------------------------------------------------

def det(A: ExactMatrix) -> Fraction:
    """Exact determinant; the empty matrix has determinant 1."""
    if not A.is_square():
        raise ValueError(f"determinant of a non-square {A.nrows}x{A.ncols} matrix")
    ints, scale = _integer_rows(A.rows)
    return Fraction(_bareiss_det(ints)) / scale


def pivot_columns(A: ExactMatrix, order: Sequence[int] | None = None) -> list[int]:
    """Column indices of a basis of the column space, chosen greedily in ``order``."""
    ints, _ = _integer_rows(A.rows)
    return _pivot_columns_int(ints, A.ncols, order)


def rank(A: ExactMatrix) -> int:
    return len(pivot_columns(A))


def rref(A: ExactMatrix) -> tuple[list[list[Fraction]], list[int]]:
    rows = [list(r) for r in A.rows]
    pivots = []
    r = 0
    for c in range(A.ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                a = rows[i][c]
                rows[i] = [x - a * y for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(A: ExactMatrix) -> list[list[Fraction]]:
    """Right-kernel basis, one vector per free column, with pivot entries from the RREF."""
    R, pivots = rref(A)
    pivset = set(pivots)
    basis = []
    for f in range(A.ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * A.ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def minor(A: ExactMatrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> ExactMatrix:
    """Submatrix with rows and columns taken in the given order."""
    for idx, bound, what in ((row_idx, A.nrows, "row"), (col_idx, A.ncols, "column")):
        if len(set(idx)) != len(idx):
            raise ValueError(f"duplicate {what} index")
        if any(not 0 <= i < bound for i in idx):
            raise IndexError(f"{what} index out of range")
    rl = [A.row_labels[i] for i in row_idx] if A.row_labels is not None else None
    cl = [A.col_labels[j] for j in col_idx] if A.col_labels is not None else None
    return ExactMatrix([[A.rows[i][j] for j in col_idx] for i in row_idx], len(col_idx),
                       row_labels=rl, col_labels=cl)


def solve(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    """Solve ``A X = B`` for square nonsingular ``A``."""
    if not A.is_square() or A.nrows != B.nrows:
        raise ValueError("solve needs a square A with as many rows as B")
    n = A.nrows
    aug = ExactMatrix([ra + rb for ra, rb in zip(A.rows, B.rows)], n + B.ncols)
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return ExactMatrix([r[n:] for r in R], B.ncols, row_labels=A.col_labels,
                       col_labels=B.col_labels)


# polynomial matrices -----------------------------------------------------

class PolyMatrix:
    """Dense matrix of polynomials sharing one variable tuple (default X1..X4)."""

    def __init__(self, rows: Iterable[Sequence[SparsePoly]], vars: Sequence[str] = IMPLICIT_VARS):
        self.vars = tuple(vars)
        self.rows = [list(r) for r in rows]
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")
            for p in r:
                if p.vars != self.vars:
                    raise ValueError("entries must share the matrix variables")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij) -> SparsePoly:
        i, j = ij
        return self.rows[i][j]

    def evaluate(self, point: Sequence) -> ExactMatrix:
        return ExactMatrix([[evaluate(p, point) for p in r] for r in self.rows], self.ncols)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.vars == other.vars and self.rows == other.rows

    def __repr__(self) -> str:
        return f"PolyMatrix({self.nrows}x{self.ncols})"


class DegreeBoundError(ArithmeticError):
    """Interpolated determinant disagrees with a held-out evaluation."""


def poly_det(A: PolyMatrix, degree_bound: int, checks: int = 3, seed: int = 0) -> SparsePoly:
    """Determinant of a polynomial matrix by evaluation and interpolation.

    Values are taken on the integer simplex lattice of total degree
    ``degree_bound``; ``checks`` random held-out points guard against an
    under-estimated bound.
    """
    if A.nrows != A.ncols:
        raise ValueError(f"determinant of a non-square {A.nrows}x{A.ncols} matrix")
    if A.nrows == 0:
        return SparsePoly.constant(A.vars, 1)
    P = interpolate(lambda pt: det(A.evaluate(pt)), A.vars, degree_bound)
    rng = random.Random(seed)
    for _ in range(checks):
        pt = [rng.randint(-50, 50) for _ in A.vars]
        if evaluate(P, pt) != det(A.evaluate(pt)):
            raise DegreeBoundError(f"determinant degree exceeds the bound {degree_bound}")
    return P
