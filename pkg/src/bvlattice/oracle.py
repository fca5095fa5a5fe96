"""Exponential-time ground truth used to check the polynomial-time routes.

Nothing here is meant to scale.  Every enumeration is capped by a
candidate budget and raises :class:`BudgetExceeded` rather than running
away.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, prod

from bvlattice._backend import core
from bvlattice.bounds import bv_box_radius
from bvlattice.errors import BudgetExceeded, EmptyKernelError, InconsistencyError, RankError
from bvlattice.hnf import det_column_lattice, row_hnf
from bvlattice.kernel import kernel_basis, lattice_equal, ndet_sq
from bvlattice.linalg import IntMatrix, MatrixLike, as_matrix, gram_det_sq, rank, sup_norm

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class KernelWitness:
    vector: tuple[int, ...]
    sup_norm: int

    @classmethod
    def of(cls, x) -> KernelWitness:
        x = tuple(x)
        return cls(x, sup_norm(x))


@dataclass(frozen=True)
class MinimaSet:
    vectors: tuple[KernelWitness, ...]
    product_sq: int

    @property
    def norms(self) -> tuple[int, ...]:
        return tuple(w.sup_norm for w in self.vectors)


def sign_normalize(x: tuple[int, ...]) -> tuple[int, ...]:
    """Flip ``x`` so its first nonzero entry is positive."""
    for v in x:
        if v:
            return x if v > 0 else tuple(-t for t in x)
    return x


def _order_key(x):
    return sup_norm(x), sign_normalize(x), x


def minor_gcd(A: MatrixLike) -> int:
    """gcd of all k x k minors of a k x n matrix, by visiting every one of them."""
    A = as_matrix(A)
    k, n = A.shape
    g = core.minor_gcd_scan(A.tolist(), k) if k <= n else 0
    if g == 0:
        raise RankError(rank(A), k)
    return g


def lll_reduce(basis, delta=Fraction(3, 4)):
    """LLL-reduced basis of the same lattice, in exact rational arithmetic."""
    b = [list(v) for v in basis]
    m = len(b)

    def gso():
        star, norms = [], []
        mu = [[Fraction(0)] * m for _ in range(m)]
        for i in range(m):
            v = [Fraction(t) for t in b[i]]
            for j in range(i):
                mu[i][j] = sum(Fraction(p) * q for p, q in zip(b[i], star[j])) / norms[j]
                v = [p - mu[i][j] * q for p, q in zip(v, star[j])]
            star.append(v)
            norms.append(sum(p * p for p in v))
        return mu, norms

    mu, norms = gso()
    k = 1
    while k < m:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [p - q * t for p, t in zip(b[k], b[j])]
                for l in range(j + 1):
                    mu[k][l] -= q * (mu[j][l] if l < j else 1)
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, norms = gso()
            k = max(k - 1, 1)
    return b


def coefficient_bounds(basis, radius):
    """Per-coefficient bounds covering every lattice vector of sup-norm <= radius.

    With ``W = Bᵀ (B Bᵀ)⁻¹`` the coefficients of ``x`` are ``x W``, so
    ``|c_j| <= radius * sum_i |W[i, j]|``.
    """
    r = len(basis)
    n = len(basis[0])
    G = [[Fraction(sum(p * q for p, q in zip(u, v))) for v in basis] for u in basis]
    inv = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    for c in range(r):
        p = next(i for i in range(c, r) if G[i][c])
        G[c], G[p] = G[p], G[c]
        inv[c], inv[p] = inv[p], inv[c]
        s = G[c][c]
        G[c] = [v / s for v in G[c]]
        inv[c] = [v / s for v in inv[c]]
        for i in range(r):
            if i != c and G[i][c]:
                f = G[i][c]
                G[i] = [a - f * b for a, b in zip(G[i], G[c])]
                inv[i] = [a - f * b for a, b in zip(inv[i], inv[c])]
    bounds = []
    for j in range(r):
        l1 = sum(abs(sum(basis[t][i] * inv[t][j] for t in range(r))) for i in range(n))
        bounds.append(floor(radius * l1))
    return bounds


def _reduced_kernel(A):
    B = kernel_basis(A)
    return lll_reduce(B.tolist())


def _enumerate(basis, radius, budget):
    bounds = coefficient_bounds(basis, radius)
    candidates = prod(2 * b + 1 for b in bounds)
    if candidates > budget:
        raise BudgetExceeded(candidates, budget)
    return core.enumerate_box(basis, bounds, radius)


def enumerate_kernel_points(
    A: MatrixLike, M: int, budget: int = DEFAULT_BUDGET, up_to_sign: bool = False
) -> list[KernelWitness]:
    """Every nonzero integer x with A x = 0 and max |x_i| <= M.

    The search runs over coefficients of an LLL-reduced kernel basis, so
    it costs about (2M+1)^(n-k) candidates instead of (2M+1)^n.  Results
    come back sorted by sup-norm, then by sign-normalized vector.  With
    ``up_to_sign`` only the member of each ``{x, -x}`` pair whose first
    nonzero entry is positive is kept.
    """
    A = as_matrix(A)
    if M < 0:
        raise ValueError("radius must be nonnegative")
    basis = _reduced_kernel(A)
    points = _enumerate(basis, M, budget)
    if up_to_sign:
        points = [x for x in points if sign_normalize(x) == x]
    points.sort(key=_order_key)
    return [KernelWitness.of(x) for x in points]


def enumerate_kernel_points_naive(A: MatrixLike, M: int, budget: int = DEFAULT_BUDGET) -> list[KernelWitness]:
    """Scan the whole box [-M, M]^n and keep what A annihilates. Cross-check only."""
    A = as_matrix(A)
    k, n = A.shape
    candidates = (2 * M + 1) ** n
    if candidates > budget:
        raise BudgetExceeded(candidates, budget)
    rows = A.tolist()
    out = []
    for x in itertools.product(range(-M, M + 1), repeat=n):
        if any(x) and all(sum(a * v for a, v in zip(r, x)) == 0 for r in rows):
            out.append(x)
    out.sort(key=_order_key)
    return [KernelWitness.of(x) for x in out]


def shortest_kernel_vector(A: MatrixLike, budget: int = DEFAULT_BUDGET) -> KernelWitness:
    """A kernel vector of least sup-norm, sign-normalized.

    The search box is ``bv_box_radius(A)``; finding nothing inside it would
    contradict the Bombieri-Vaaler bound and raises InconsistencyError.
    """
    A = as_matrix(A)
    M = bv_box_radius(A)
    pts = _enumerate(_reduced_kernel(A), M, budget)
    if not pts:
        raise InconsistencyError(f"no nonzero kernel vector with sup-norm <= {M}")
    return KernelWitness.of(sign_normalize(min(pts, key=_order_key)))


def _greedy_minima(A, budget):
    A = as_matrix(A)
    basis = _reduced_kernel(A)
    r = len(basis)
    # the reduced basis itself is r independent vectors, so this radius always suffices
    cap = max(sup_norm(v) for v in basis)
    M = min(cap, max(1, bv_box_radius(A)))
    while True:
        pts = {sign_normalize(x) for x in _enumerate(basis, M, budget)}
        chosen = []
        for x in sorted(pts, key=_order_key):
            if rank(chosen + [list(x)]) > len(chosen):
                chosen.append(list(x))
                if len(chosen) == r:
                    break
        if len(chosen) == r or M >= cap:
            break
        M = min(cap, 2 * M)
    if len(chosen) != r:
        raise InconsistencyError("reduced kernel basis did not yield a full set of independent vectors")
    witnesses = tuple(KernelWitness.of(x) for x in chosen)
    return MinimaSet(witnesses, prod(w.sup_norm for w in witnesses) ** 2)


def successive_minima_product(A: MatrixLike, budget: int = DEFAULT_BUDGET) -> MinimaSet:
    """n-k independent kernel vectors picked greedily by sup-norm.

    Ties go to the lexicographically smallest sign-normalized vector.
    Raises InconsistencyError if the product of the norms breaks the
    Bombieri-Vaaler product bound.
    """
    ms = _greedy_minima(A, budget)
    bound = ndet_sq(A)
    if ms.product_sq > bound:
        raise InconsistencyError(f"product of minima squared {ms.product_sq} exceeds ndet^2 = {bound}")
    return ms


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: object
    rhs: object
    relation: str = "=="


@dataclass(frozen=True)
class VerificationRecord:
    shape: tuple[int, int]
    checks: tuple[Check, ...]
    # True when the kernel of the kernel is a strictly larger lattice than L_R(A)
    kernel_not_involutive: bool
    witness: KernelWitness
    minima: MinimaSet = field(repr=False)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def verify_theorems(A: MatrixLike, budget: int = DEFAULT_BUDGET) -> VerificationRecord:
    """Run each identity and bound on ``A`` and record both sides exactly."""
    A = as_matrix(A)
    k, n = A.shape
    r = rank(A)
    if r != k:
        raise RankError(r, k)
    if k == n:
        raise EmptyKernelError(f"{k}x{n} matrix of full rank has trivial kernel")

    nd = ndet_sq(A)
    K1 = kernel_basis(A)
    K2 = kernel_basis(K1)
    K3 = kernel_basis(K2)
    d_hnf, d_minor = det_column_lattice(A), minor_gcd(A)
    g_kernel = gram_det_sq(K1)
    nd_kernel = ndet_sq(K1)
    radius = bv_box_radius(A)
    witness = shortest_kernel_vector(A, budget)
    minima = _greedy_minima(A, budget)

    checks = (
        Check("hnf_det_equals_minor_gcd", d_hnf == d_minor, d_hnf, d_minor),
        Check("kernel_det_equals_ndet", g_kernel == nd, g_kernel, nd),
        Check("ndet_invariant_under_kernel", nd_kernel == nd, nd_kernel, nd),
        Check(
            "triple_kernel_identity",
            lattice_equal(K3, K1),
            row_hnf(K3).tolist(),
            row_hnf(K1).tolist(),
        ),
        Check("bv1_witness_within_radius", witness.sup_norm <= radius, witness.sup_norm, radius, "<="),
        Check("bv2_minima_product", minima.product_sq <= nd, minima.product_sq, nd, "<="),
    )
    return VerificationRecord((k, n), checks, not lattice_equal(K2, A), witness, minima)
