"""Column Hermite normal form with its unimodular transform.

For a k x n integer matrix ``A`` of full row rank, :func:`column_hnf` finds
a unimodular ``U`` with ``A @ U == (H | 0)`` where ``H`` is k x k lower
triangular, has a positive diagonal, and every entry left of the diagonal
satisfies ``0 <= H[i, j] < H[i, i]``.  Under that normalization ``H`` is
unique; ``U`` is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from bvlattice.errors import DimensionError, EmptyKernelError, RankError
from bvlattice.linalg import IntMatrix, MatrixLike, as_matrix, rank

STRATEGIES = ("euclid", "minpivot")


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


@dataclass(frozen=True)
class HnfResult:
    H: IntMatrix
    U: IntMatrix
    k: int
    n: int

    @property
    def diagonal(self) -> list[int]:
        return [self.H[i, i] for i in range(self.k)]

    def blocks(self):
        return extract_blocks(self)


def _combine(ci, cj, p):
    # Unimodular 2x2 step that moves gcd(ci[p], cj[p]) into ci and zeroes cj[p].
    a, b = ci[p], cj[p]
    x, y, g = xgcd(a, b)
    ag, bg = a // g, b // g
    for t in range(len(ci)):
        u, v = ci[t], cj[t]
        ci[t] = x * u + y * v
        cj[t] = ag * v - bg * u


def _axpy(dst, src, q):
    for t in range(len(dst)):
        dst[t] -= q * src[t]


def _reduce_row(cols, i, n, strategy):
    if strategy == "euclid":
        ci = cols[i]
        for j in range(i + 1, n):
            if cols[j][i]:
                _combine(ci, cols[j], i)
        return
    while True:
        live = [j for j in range(i, n) if cols[j][i]]
        p = min(live, key=lambda j: (abs(cols[j][i]), j))
        cols[i], cols[p] = cols[p], cols[i]
        ci = cols[i]
        pivot = ci[i]
        done = True
        for j in range(i + 1, n):
            cj = cols[j]
            if cj[i]:
                _axpy(cj, ci, cj[i] // pivot)
                if cj[i]:
                    done = False
        if done:
            return


def _hnf_columns(A: IntMatrix, strategy: str, with_transform: bool):
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    k, n = A.shape
    r = rank(A)
    if r != k:
        raise RankError(r, k)
    # column j of (A over U) stored as one list: A-part first, then U-part
    cols = [list(A.column(j)) for j in range(n)]
    if with_transform:
        for j in range(n):
            cols[j].extend(int(t == j) for t in range(n))
    for i in range(k):
        _reduce_row(cols, i, n, strategy)
        ci = cols[i]
        if ci[i] < 0:
            for t in range(len(ci)):
                ci[t] = -ci[t]
        pivot = ci[i]
        for l in range(i):
            q = cols[l][i] // pivot
            if q:
                _axpy(cols[l], ci, q)
    return cols


def column_hnf(A: MatrixLike, strategy: str = "euclid") -> HnfResult:
    """Column HNF of a full-row-rank matrix, with the transform ``U``.

    ``strategy`` selects the reduction order: ``"euclid"`` sweeps each row
    left to right with extended-gcd column pairs, ``"minpivot"`` repeatedly
    pivots on the smallest entry.  Both give the same ``H``.

    >>> column_hnf([[1, 2, 3], [4, 5, 6]]).H.tolist()
    [[1, 0], [1, 3]]
    """
    A = as_matrix(A)
    k, n = A.shape
    cols = _hnf_columns(A, strategy, with_transform=True)
    H = IntMatrix(k, k, (cols[j][i] for i in range(k) for j in range(k)))
    U = IntMatrix(n, n, (cols[j][k + i] for i in range(n) for j in range(n)))
    return HnfResult(H, U, k, n)


def det_column_lattice(A: MatrixLike) -> int:
    """det of the lattice spanned by the columns of ``A``, i.e. det(H).

    Equal to the gcd of all maximal minors of ``A``, but computed in
    polynomial time.
    """
    A = as_matrix(A)
    k = A.rows
    cols = _hnf_columns(A, "euclid", with_transform=False)
    return prod(cols[i][i] for i in range(k))


def extract_blocks(r: HnfResult):
    """Split ``U`` into ``(U11, U12, U21, U22)``.

    The layout is ``U = [[U11, U21], [U12, U22]]``: U11 is the top-left
    k x k block, U21 top-right k x (n-k), U12 bottom-left (n-k) x k and
    U22 bottom-right.
    """
    k, n = r.k, r.n
    if k == n:
        raise EmptyKernelError("k == n: U has no kernel blocks")
    top, bottom = range(k), range(k, n)
    U = r.U
    return (
        U.submatrix(top, top),
        U.submatrix(bottom, top),
        U.submatrix(top, bottom),
        U.submatrix(bottom, bottom),
    )


def assemble_blocks(U11, U12, U21, U22) -> IntMatrix:
    top = [U11.row(i) + U21.row(i) for i in range(U11.rows)]
    bottom = [U12.row(i) + U22.row(i) for i in range(U12.rows)]
    return IntMatrix.from_rows(top + bottom)


def row_hnf(B: MatrixLike) -> IntMatrix:
    """Canonical basis of the lattice spanned by the rows of ``B``.

    Row echelon form with positive pivots and the entries above each pivot
    reduced into ``[0, pivot)``.  Two matrices span the same lattice exactly
    when their row HNFs are equal.
    """
    B = as_matrix(B)
    m = B.tolist()
    nrows, ncols = B.shape
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        for i in range(r + 1, nrows):
            if m[i][col]:
                _combine(m[r], m[i], col)
        pivot_row = m[r]
        if pivot_row[col] == 0:
            continue
        if pivot_row[col] < 0:
            m[r] = pivot_row = [-v for v in pivot_row]
        pivot = pivot_row[col]
        for i in range(r):
            q = m[i][col] // pivot
            if q:
                _axpy(m[i], pivot_row, q)
        r += 1
    if r == 0:
        raise DimensionError("zero matrix spans the zero lattice; no canonical basis")
    return IntMatrix.from_rows(m[:r])
