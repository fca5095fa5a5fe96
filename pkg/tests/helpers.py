"""Independent oracles and random instance generators for the test suite."""

import itertools
import random
from fractions import Fraction

from bvlattice.linalg import IntMatrix

# ---------------------------------------------------------------- oracles
# Deliberately naive and independent of the package's elimination code.


def cofactor_det(m):
    m = [list(r) for r in m]
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    return sum(
        (-1) ** j * m[0][j] * cofactor_det([r[:j] + r[j + 1 :] for r in m[1:]]) for j in range(n) if m[0][j]
    )


def fraction_rank(m):
    m = [[Fraction(v) for v in r] for r in m]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def naive_minor_gcd(rows):
    from math import gcd

    k, n = len(rows), len(rows[0])
    g = 0
    for cols in itertools.combinations(range(n), k):
        g = gcd(g, cofactor_det([[r[c] for c in cols] for r in rows]))
    return g


def in_row_lattice(B, x):
    """Is x an integer combination of the rows of B (full row rank)?"""
    r, n = len(B), len(B[0])
    G = [[Fraction(sum(p * q for p, q in zip(u, v))) for v in B] for u in B]
    rhs = [Fraction(sum(p * q for p, q in zip(u, x))) for u in B]
    # solve G c = B x by Gauss-Jordan
    aug = [G[i] + [rhs[i]] for i in range(r)]
    for c in range(r):
        p = next(i for i in range(c, r) if aug[i][c])
        aug[c], aug[p] = aug[p], aug[c]
        s = aug[c][c]
        aug[c] = [v / s for v in aug[c]]
        for i in range(r):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    coeffs = [aug[i][r] for i in range(r)]
    if any(c.denominator != 1 for c in coeffs):
        return False
    return all(sum(int(coeffs[j]) * B[j][i] for j in range(r)) == x[i] for i in range(n))


# ------------------------------------------------------------ generators


def random_full_rank(rng, k, n, lo, hi):
    while True:
        rows = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(k)]
        if fraction_rank(rows) == k:
            return IntMatrix.from_rows(rows)


def random_family(seed, count, max_n, lo, hi, square_ok=False):
    """Random full-row-rank matrices with 1 <= k < n <= max_n (or k <= n)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        k = rng.randint(1, n if square_ok else n - 1)
        out.append(random_full_rank(rng, k, n, lo, hi))
    return out


def random_unimodular(rng, k, steps=6):
    m = [[int(i == j) for j in range(k)] for i in range(k)]
    for _ in range(steps):
        i, j = rng.sample(range(k), 2) if k > 1 else (0, 0)
        if i == j:
            m[i] = [-v for v in m[i]]
            continue
        q = rng.randint(-3, 3)
        m[i] = [a + q * b for a, b in zip(m[i], m[j])]
        if rng.random() < 0.3:
            m[i], m[j] = m[j], m[i]
    return IntMatrix.from_rows(m)


# ------------------------------------------------- acceptance reporting

ACCEPTANCE_LINES = []
