# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels in ``_pycore``.

Fixed-width arithmetic is used only when an exact a-priori bound proves it
cannot overflow; otherwise the call is forwarded to the pure-Python kernel.
Bareiss intermediates are minors of the input, so the Hadamard product of
the row norms bounds all of them.  Products of two such minors must fit in
a signed 128-bit integer, hence the 2**126 cap on the squared bound.
"""

from libc.stdlib cimport malloc, free

from bvlattice import _pycore

cdef extern from *:
    """
    typedef __int128 i128;
    """
    ctypedef long long i128

NAME = "cython"

cdef object _SQ_LIMIT = 1 << 126
cdef object _LL_LIMIT = 1 << 62


def _fits_i128(rows):
    bound = 1
    for r in rows:
        s = 0
        for v in r:
            s += v * v
        if s > 1:
            bound *= s
            if bound >= _SQ_LIMIT:
                return False
    return True


cdef long long _bareiss(i128 *m, int n) nogil:
    cdef int k, i, j
    cdef i128 pivot, a, prev = 1, tmp
    cdef int sign = 1
    if n == 0:
        return 1
    for k in range(n - 1):
        if m[k * n + k] == 0:
            i = k + 1
            while i < n and m[i * n + k] == 0:
                i += 1
            if i == n:
                return 0
            for j in range(n):
                tmp = m[k * n + j]
                m[k * n + j] = m[i * n + j]
                m[i * n + j] = tmp
            sign = -sign
        pivot = m[k * n + k]
        for i in range(k + 1, n):
            a = m[i * n + k]
            for j in range(k + 1, n):
                m[i * n + j] = (m[i * n + j] * pivot - a * m[k * n + j]) / prev
        prev = pivot
    return <long long>(sign * m[n * n - 1])


def det(rows):
    cdef int n = len(rows)
    cdef int i, j
    cdef i128 *m
    cdef long long d
    if n == 0 or not _fits_i128(rows):
        return _pycore.det(rows)
    m = <i128 *>malloc(n * n * sizeof(i128))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            r = rows[i]
            for j in range(n):
                m[i * n + j] = <long long>r[j]
        with nogil:
            d = _bareiss(m, n)
    finally:
        free(m)
    return d


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


def minor_gcd_scan(rows, int k):
    cdef int rcount = len(rows)
    cdef int n = len(rows[0])
    cdef int i, j, t
    cdef long long g = 0, d
    cdef long long *src
    cdef i128 *m
    cdef int *idx
    if k != rcount or k == 0 or k > n or not _fits_i128(rows):
        return _pycore.minor_gcd_scan(rows, k)
    src = <long long *>malloc(k * n * sizeof(long long))
    m = <i128 *>malloc(k * k * sizeof(i128))
    idx = <int *>malloc(k * sizeof(int))
    if src == NULL or m == NULL or idx == NULL:
        free(src)
        free(m)
        free(idx)
        raise MemoryError()
    try:
        for i in range(k):
            r = rows[i]
            for j in range(n):
                src[i * n + j] = r[j]
        with nogil:
            for i in range(k):
                idx[i] = i
            while True:
                for i in range(k):
                    for j in range(k):
                        m[i * k + j] = src[i * n + idx[j]]
                d = _bareiss(m, k)
                if d:
                    g = _gcd(g, d)
                # next combination in lexicographic order
                t = k - 1
                while t >= 0 and idx[t] == n - k + t:
                    t -= 1
                if t < 0:
                    break
                idx[t] += 1
                for j in range(t + 1, k):
                    idx[j] = idx[j - 1] + 1
    finally:
        free(src)
        free(m)
        free(idx)
    return g


def enumerate_box(basis, bounds, radius):
    cdef int r = len(basis)
    cdef int n = len(basis[0])
    cdef int i, j
    cdef long long rad
    cdef long long *b
    cdef long long *c
    cdef long long *lim
    cdef long long *x
    cdef bint ok
    reach = 0
    for j in range(r):
        reach += bounds[j] * max(abs(v) for v in basis[j])
    if reach >= _LL_LIMIT or radius >= _LL_LIMIT:
        return _pycore.enumerate_box(basis, bounds, radius)
    rad = radius
    b = <long long *>malloc(r * n * sizeof(long long))
    c = <long long *>malloc(r * sizeof(long long))
    lim = <long long *>malloc(r * sizeof(long long))
    x = <long long *>malloc(n * sizeof(long long))
    if b == NULL or c == NULL or lim == NULL or x == NULL:
        free(b)
        free(c)
        free(lim)
        free(x)
        raise MemoryError()
    out = []
    try:
        for j in range(r):
            lim[j] = bounds[j]
            c[j] = -lim[j]
            row = basis[j]
            for i in range(n):
                b[j * n + i] = row[i]
        for i in range(n):
            x[i] = 0
            for j in range(r):
                x[i] += c[j] * b[j * n + i]
        while True:
            ok = True
            for i in range(n):
                if x[i] > rad or x[i] < -rad:
                    ok = False
                    break
            if ok:
                ok = False
                for i in range(n):
                    if x[i] != 0:
                        ok = True
                        break
                if ok:
                    out.append(tuple([x[i] for i in range(n)]))
            j = 0
            while j < r:
                if c[j] < lim[j]:
                    c[j] += 1
                    for i in range(n):
                        x[i] += b[j * n + i]
                    break
                for i in range(n):
                    x[i] -= 2 * lim[j] * b[j * n + i]
                c[j] = -lim[j]
                j += 1
            if j == r:
                break
    finally:
        free(b)
        free(c)
        free(lim)
        free(x)
    return out
