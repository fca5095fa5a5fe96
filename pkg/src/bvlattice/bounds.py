"""Siegel and Bombieri-Vaaler height bounds as exact integer floors."""

from __future__ import annotations

import decimal
from dataclasses import dataclass, field
from math import isqrt

from bvlattice.errors import DegenerateInputError, EmptyKernelError, InconsistencyError, RankError
from bvlattice.kernel import ndet_sq
from bvlattice.linalg import MatrixLike, as_matrix, rank


def integer_root(x: int, r: int) -> int:
    """Largest m with m**r <= x.

    >>> integer_root(10**18, 3)
    1000000
    """
    if r < 1:
        raise ValueError(f"root index must be >= 1, got {r}")
    if x < 0:
        raise ValueError(f"integer_root of negative number {x}")
    if r == 1 or x < 2:
        return x
    if r == 2:
        return isqrt(x)
    m = 1 << -(-x.bit_length() // r)  # >= the true root
    while True:
        nxt = ((r - 1) * m + x // m ** (r - 1)) // r
        if nxt >= m:
            break
        m = nxt
    while m**r > x:
        m -= 1
    while (m + 1) ** r <= x:
        m += 1
    return m


def approx_root(x: int, r: int, digits: int = 20) -> str:
    """``x ** (1/r)`` to ``digits`` significant digits, for display only."""
    if x == 0:
        return "0"
    ctx = decimal.Context(prec=digits + 10)
    val = ctx.power(ctx.create_decimal(x), ctx.divide(1, r))
    return str(decimal.Context(prec=digits).plus(val))


def _check_kernel_shape(A):
    k, n = A.shape
    r = rank(A)
    if r != k:
        raise RankError(r, k)
    if k == n:
        raise EmptyKernelError(f"{k}x{n} matrix of full rank has trivial kernel")
    return k, n


def bv_box_radius(A: MatrixLike) -> int:
    """floor(ndet ** (1/(n-k))): some nonzero kernel vector has sup-norm at most this."""
    A = as_matrix(A)
    k, n = _check_kernel_shape(A)
    return integer_root(ndet_sq(A), 2 * (n - k))


def siegel_floor(A: MatrixLike) -> int:
    """floor(1 + (n a) ** (k / (n-k))) with ``a`` the largest absolute entry."""
    A = as_matrix(A)
    k, n = A.shape
    if k >= n:
        raise EmptyKernelError(f"Siegel's bound needs more columns than rows, got {k}x{n}")
    a = A.max_abs()
    if a == 0:
        raise DegenerateInputError("zero matrix has no meaningful Siegel bound")
    return 1 + integer_root((n * a) ** k, n - k)


@dataclass(frozen=True)
class BoundReport:
    ndet_sq: int
    codim: int
    bv_box_radius: int
    siegel_floor: int
    a_max: int
    ndet_approx: str = field(compare=False)

    @property
    def bv_approx(self) -> str:
        return approx_root(self.ndet_sq, 2 * self.codim)


def bound_report(A: MatrixLike) -> BoundReport:
    A = as_matrix(A)
    k, n = _check_kernel_shape(A)
    nd = ndet_sq(A)
    codim = n - k
    bv = integer_root(nd, 2 * codim)
    sf = siegel_floor(A)
    if not (bv ** (2 * codim) <= nd < (bv + 1) ** (2 * codim)):
        raise InconsistencyError("bv_box_radius is not the floor of ndet^(1/codim)")
    if bv > sf:
        raise InconsistencyError(f"Bombieri-Vaaler radius {bv} exceeds Siegel floor {sf}")
    return BoundReport(nd, codim, bv, sf, A.max_abs(), approx_root(nd, 2))
