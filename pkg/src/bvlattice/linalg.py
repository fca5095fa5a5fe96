"""Exact integer matrices and the determinant/rank primitives.

All arithmetic is on Python ints.  Lattice determinants are always
handled as squares so nothing here ever needs a square root.
"""

from __future__ import annotations

import operator
from collections.abc import Iterable, Sequence

from bvlattice._backend import core
from bvlattice.errors import DimensionError


class IntMatrix:
    """Dense immutable matrix of unbounded integers, stored row-major.

    >>> A = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    >>> A.shape
    (2, 3)
    >>> (A @ A.T).tolist()
    [[14, 32], [32, 77]]
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(operator.index(v) for v in entries)
        if rows < 1 or cols < 1:
            raise DimensionError(f"matrix must be at least 1x1, got {rows}x{cols}")
        if len(entries) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and one column")
        ncols = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise DimensionError(f"row {i} has {len(r)} entries, expected {ncols}")
        return cls(len(rows), ncols, (v for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, [0] * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows, (self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols]

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> IntMatrix:
        row_idx, col_idx = list(row_idx), list(col_idx)
        return IntMatrix(len(row_idx), len(col_idx), (self.entries[i * self.cols + j] for i in row_idx for j in col_idx))

    def max_abs(self) -> int:
        return max(abs(v) for v in self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return matmul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"


MatrixLike = IntMatrix | Sequence[Sequence[int]]


def as_matrix(M: MatrixLike) -> IntMatrix:
    """Accept an :class:`IntMatrix` or any nested sequence of ints."""
    if isinstance(M, IntMatrix):
        return M
    return IntMatrix.from_rows(M)


def sup_norm(x: Iterable[int]) -> int:
    return max((abs(v) for v in x), default=0)


def matmul(A: MatrixLike, B: MatrixLike) -> IntMatrix:
    A, B = as_matrix(A), as_matrix(B)
    if A.cols != B.rows:
        raise DimensionError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    bcols = [B.column(j) for j in range(B.cols)]
    return IntMatrix(
        A.rows,
        B.cols,
        (sum(map(operator.mul, A.row(i), bc)) for i in range(A.rows) for bc in bcols),
    )


def det(M: MatrixLike) -> int:
    """Exact determinant by fraction-free elimination.

    >>> det([[1, 2], [3, 4]])
    -2
    """
    M = as_matrix(M)
    if M.rows != M.cols:
        raise DimensionError(f"determinant needs a square matrix, got {M.rows}x{M.cols}")
    return core.det(M.tolist())


def gram_det_sq(M: MatrixLike) -> int:
    """det(M Mᵀ): the squared volume of the lattice spanned by the rows of M."""
    M = as_matrix(M)
    return det(M @ M.T)


def rank(M: MatrixLike) -> int:
    """Rank over Q, by fraction-free row echelon reduction."""
    M = as_matrix(M)
    m = M.tolist()
    nrows, ncols = M.shape
    r = 0
    prev = 1
    for col in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][col]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pivot_row = m[r]
        pivot = pivot_row[col]
        for i in range(r + 1, nrows):
            ri = m[i]
            a = ri[col]
            for j in range(col + 1, ncols):
                ri[j] = (ri[j] * pivot - a * pivot_row[j]) // prev
            ri[col] = 0
        prev = pivot
        r += 1
    return r


def hstack(A: MatrixLike, B: MatrixLike) -> IntMatrix:
    A, B = as_matrix(A), as_matrix(B)
    if A.rows != B.rows:
        raise DimensionError("hstack needs equal row counts")
    return IntMatrix.from_rows([A.row(i) + B.row(i) for i in range(A.rows)])
