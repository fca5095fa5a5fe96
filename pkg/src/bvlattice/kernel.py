"""Kernel lattices, the normalized lattice and the normalized determinant.

For ``A`` of full row rank k < n the kernel lattice is every integer ``x``
with ``A @ x == 0``.  Its basis is read directly off the transform of the
column HNF, so everything stays in integer arithmetic.
"""

from __future__ import annotations

from bvlattice.errors import DimensionError, EmptyKernelError, InconsistencyError, RankError
from bvlattice.hnf import column_hnf, det_column_lattice, row_hnf
from bvlattice.linalg import IntMatrix, MatrixLike, as_matrix, gram_det_sq, rank


def kernel_basis(A: MatrixLike) -> IntMatrix:
    """Basis of {x in Z^n : A x = 0} as the rows of an (n-k) x n matrix.

    The rows are the last n-k columns of the HNF transform ``U``; which
    basis comes out depends on the reduction, the lattice does not.

    >>> B = kernel_basis([[1, 2, 3], [4, 5, 6]])
    >>> B.shape, lattice_equal(B, [[1, -2, 1]])
    ((1, 3), True)
    """
    A = as_matrix(A)
    k, n = A.shape
    if k >= n:
        r = rank(A)
        if r < k:
            raise RankError(r, k)
        raise EmptyKernelError(f"{k}x{n} matrix of full rank has trivial kernel")
    res = column_hnf(A)
    U = res.U
    B = IntMatrix(n - k, n, (U[i, j] for j in range(k, n) for i in range(n)))
    if any((A @ B.T).entries):
        raise InconsistencyError("kernel basis does not annihilate A")
    return B


def normalized_lattice_basis(A: MatrixLike) -> IntMatrix:
    """H⁻¹ A, a basis of the kernel of the kernel of the row lattice of ``A``.

    The rows are primitive.  Solving ``H N = A`` by forward substitution
    must divide exactly at every step; a remainder means the HNF is wrong.
    """
    A = as_matrix(A)
    k, n = A.shape
    H = column_hnf(A).H
    N = []
    for i in range(k):
        acc = list(A.row(i))
        for l in range(i):
            h = H[i, l]
            if h:
                acc = [a - h * v for a, v in zip(acc, N[l])]
        d = H[i, i]
        q = [a // d for a in acc]
        if any(a - d * v for a, v in zip(acc, q)):
            raise InconsistencyError(f"H^-1 A is not integral in row {i}")
        N.append(q)
    return IntMatrix.from_rows(N)


def ndet_sq(A: MatrixLike) -> int:
    """Square of the normalized determinant det(L_R(A)) / det(L_C(A)).

    >>> ndet_sq([[2, 2]])
    2
    """
    A = as_matrix(A)
    g = gram_det_sq(A)
    d = det_column_lattice(A)
    q, rem = divmod(g, d * d)
    if rem:
        raise InconsistencyError(f"det(A A^T) = {g} is not divisible by det(H)^2 = {d * d}")
    return q


def lattice_equal(B1: MatrixLike, B2: MatrixLike) -> bool:
    """True when the rows of ``B1`` and ``B2`` span the same lattice."""
    B1, B2 = as_matrix(B1), as_matrix(B2)
    if B1.shape != B2.shape:
        raise DimensionError(f"cannot compare lattices of bases {B1.shape} and {B2.shape}")
    for B in (B1, B2):
        r = rank(B)
        if r != B.rows:
            raise RankError(r, B.rows)
    return row_hnf(B1) == row_hnf(B2)
