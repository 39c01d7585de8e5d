# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels.

Both kernels work in fixed-width arithmetic and raise instead of returning
a wrong answer: OverflowError when an intermediate leaves the 64-bit safe
range, NotImplementedError when the algorithm's preconditions fail.  The
dispatcher in ``glform._kernels`` falls back to the exact pure-Python
implementations on either signal.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef long long int128 "__int128"

# entries whose products stay inside __int128 during one Bareiss update
DEF SAFE_LIMIT = 4611686018427387903  # 2**62 - 1


cdef inline int128 _abs128(int128 x):
    return -x if x < 0 else x


cdef int _bareiss(long long* m, int n, long long* out_pivots) except -1:
    """Fraction-free elimination without row swaps; writes the leading
    principal minors D_1..D_n into out_pivots.  Returns 1, or raises:
    NotImplementedError on a zero pivot (minor), OverflowError when an
    intermediate exceeds the safe range."""
    cdef int k, i, j
    cdef int128 num, piv, prev, val
    prev = 1
    for k in range(n):
        piv = m[k * n + k]
        if k < n - 1 and piv == 0:
            raise NotImplementedError("zero leading principal minor")
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = (<int128> m[i * n + j]) * piv \
                    - (<int128> m[i * n + k]) * (<int128> m[k * n + j])
                val = num // prev
                if _abs128(val) > SAFE_LIMIT:
                    raise OverflowError
                m[i * n + j] = <long long> val
            m[i * n + k] = 0
        out_pivots[k] = <long long> piv
        prev = piv
    return 1


def det_exact(rows):
    """Determinant of an integer matrix, exact or OverflowError.

    Uses Bareiss with partial pivoting (row swaps tracked by sign)."""
    cdef int n = len(rows)
    if n == 0:
        return 1
    cdef long long* m = <long long*> malloc(n * n * sizeof(long long))
    if m == NULL:
        raise MemoryError
    cdef int i, j, k, piv_row, sign = 1
    cdef int128 num, prev, val
    cdef long long tmp
    try:
        for i in range(n):
            row = rows[i]
            for j in range(n):
                v = row[j]
                if v > SAFE_LIMIT or v < -SAFE_LIMIT:
                    raise OverflowError
                m[i * n + j] = <long long> v
        prev = 1
        for k in range(n - 1):
            piv_row = -1
            for i in range(k, n):
                if m[i * n + k] != 0:
                    piv_row = i
                    break
            if piv_row < 0:
                return 0
            if piv_row != k:
                sign = -sign
                for j in range(n):
                    tmp = m[k * n + j]
                    m[k * n + j] = m[piv_row * n + j]
                    m[piv_row * n + j] = tmp
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = (<int128> m[i * n + j]) * (<int128> m[k * n + k]) \
                        - (<int128> m[i * n + k]) * (<int128> m[k * n + j])
                    val = num // prev
                    if _abs128(val) > SAFE_LIMIT:
                        raise OverflowError
                    m[i * n + j] = <long long> val
                m[i * n + k] = 0
            prev = m[k * n + k]
        return sign * int(m[(n - 1) * n + (n - 1)])
    finally:
        free(m)


def signature_triple(rows):
    """(n_plus, n_minus, n_zero) of a symmetric integer matrix via sign
    changes in the sequence of leading principal minors.

    Only valid when every leading principal minor is nonzero; otherwise
    raises NotImplementedError and the caller falls back to the exact
    congruence path."""
    cdef int n = len(rows)
    if n == 0:
        return (0, 0, 0)
    cdef long long* m = <long long*> malloc(n * n * sizeof(long long))
    cdef long long* pivots = <long long*> malloc(n * sizeof(long long))
    if m == NULL or pivots == NULL:
        if m != NULL:
            free(m)
        if pivots != NULL:
            free(pivots)
        raise MemoryError
    cdef int i, j, n_minus = 0
    cdef long long prev_sign = 1, s
    try:
        for i in range(n):
            row = rows[i]
            if len(row) != n:
                raise ValueError("matrix must be square")
            for j in range(n):
                v = row[j]
                if v > SAFE_LIMIT or v < -SAFE_LIMIT:
                    raise OverflowError
                m[i * n + j] = <long long> v
                if j < i and rows[j][i] != v:
                    raise ValueError("matrix must be symmetric")
        _bareiss(m, n, pivots)
        if pivots[n - 1] == 0:
            raise NotImplementedError("singular matrix")
        for i in range(n):
            s = 1 if pivots[i] > 0 else -1
            if s != prev_sign:
                n_minus += 1
            prev_sign = s
        return (n - n_minus, n_minus, 0)
    finally:
        free(m)
        free(pivots)
