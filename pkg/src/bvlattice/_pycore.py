"""Pure-Python versions of the hot kernels.

Every function here has a twin of the same name and signature in the
compiled ``_core`` extension.  Arguments are plain lists of lists of
Python ints so the two implementations can be swapped freely.
"""

from itertools import combinations
from math import gcd

NAME = "python"


def det(rows):
    """Bareiss fraction-free determinant of a square list-of-lists."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
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
        rk = m[k]
        pivot = rk[k]
        for i in range(k + 1, n):
            ri = m[i]
            a = ri[k]
            for j in range(k + 1, n):
                # exact: every intermediate is a minor of the input
                ri[j] = (ri[j] * pivot - a * rk[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def minor_gcd_scan(rows, k):
    """gcd of |det| over all k-column submatrices. 0 if every minor vanishes."""
    n = len(rows[0])
    g = 0
    for cols in combinations(range(n), k):
        d = det([[r[c] for c in cols] for r in rows])
        if d:
            g = gcd(g, d)
    return g


def enumerate_box(basis, bounds, radius):
    """Nonzero vectors ``c @ basis`` with sup-norm <= radius, |c_j| <= bounds[j].

    Walks the coefficient box as an odometer, updating the image vector
    incrementally.  Returns the vectors in odometer order.
    """
    r = len(basis)
    n = len(basis[0])
    c = [-b for b in bounds]
    x = [sum(c[j] * basis[j][i] for j in range(r)) for i in range(n)]
    span = [[2 * bounds[j] * v for v in basis[j]] for j in range(r)]
    out = []
    rng = range(n)
    while True:
        for i in rng:
            if x[i] > radius or x[i] < -radius:
                break
        else:
            if any(x):
                out.append(tuple(x))
        j = 0
        while j < r:
            if c[j] < bounds[j]:
                c[j] += 1
                row = basis[j]
                for i in rng:
                    x[i] += row[i]
                break
            c[j] = -bounds[j]
            row = span[j]
            for i in rng:
                x[i] -= row[i]
            j += 1
        else:
            return out
