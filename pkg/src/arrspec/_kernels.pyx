# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Dense int64 fraction-free elimination kernel.

Mirrors ``arrspec.elimination.rank_python``; see that module for the
algorithm.  All arithmetic is overflow-checked.
"""
from libc.stdlib cimport malloc, free
from libc.limits cimport LLONG_MAX, LLONG_MIN

cdef extern from *:
    """
    static inline int arr_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int arr_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint arr_mul_ovf(long long a, long long b, long long *r) nogil
    bint arr_sub_ovf(long long a, long long b, long long *r) nogil


cdef inline long long _abs(long long a) nogil:
    return -a if a < 0 else a


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long t
    a = _abs(a)
    b = _abs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int _eliminate(long long[:, ::1] m, Py_ssize_t *row_nnz, Py_ssize_t *col_nnz,
                    char *alive, long long *scratch, Py_ssize_t *rank_out) nogil:
    """Returns 0 when finished, 1 when stopped by int64 overflow.

    Rows are committed whole from *scratch*, so on overflow every live row
    is a valid intermediate row; the current pivot row is put back among the
    live rows, and ``rank_out`` counts only completed pivots.
    """
    cdef Py_ssize_t nr = m.shape[0], nc = m.shape[1]
    cdef Py_ssize_t i, j, p, pc
    cdef long long v, a, pv, g, mp, ma, x, y, prod, new, best_abs, cost, best_cost
    cdef bint done

    rank_out[0] = 0
    while True:
        p = -1
        pc = -1
        best_abs = LLONG_MAX
        best_cost = LLONG_MAX
        done = False
        for i in range(nr):
            if not alive[i] or row_nnz[i] == 0:
                continue
            for j in range(nc):
                v = m[i, j]
                if v == 0:
                    continue
                a = _abs(v)
                cost = (row_nnz[i] - 1) * (col_nnz[j] - 1)
                if a < best_abs or (a == best_abs and cost < best_cost):
                    best_abs = a
                    best_cost = cost
                    p = i
                    pc = j
                    if a == 1 and cost == 0:
                        done = True
                        break
            if done:
                break
        if p < 0:
            return 0

        alive[p] = 0
        for j in range(nc):
            if m[p, j] != 0:
                col_nnz[j] -= 1
        pv = m[p, pc]

        for i in range(nr):
            if not alive[i] or m[i, pc] == 0:
                continue
            a = m[i, pc]
            g = _gcd(pv, a)
            mp = pv // g
            ma = a // g
            g = 0
            for j in range(nc):
                x = m[i, j]
                y = m[p, j]
                if mp != 1 and x != 0:
                    if arr_mul_ovf(x, mp, &x):
                        alive[p] = 1
                        return 1
                if y != 0:
                    if arr_mul_ovf(ma, y, &prod) or arr_sub_ovf(x, prod, &x):
                        alive[p] = 1
                        return 1
                if x == LLONG_MIN:
                    alive[p] = 1
                    return 1
                scratch[j] = x
                if x != 0 and g != 1:
                    g = _gcd(g, x)
            if g == 0:
                g = 1
            for j in range(nc):
                new = scratch[j] // g
                if m[i, j] == 0 and new != 0:
                    row_nnz[i] += 1
                    col_nnz[j] += 1
                elif m[i, j] != 0 and new == 0:
                    row_nnz[i] -= 1
                    col_nnz[j] -= 1
                m[i, j] = new
        rank_out[0] += 1


def eliminate_int64(long long[:, ::1] m not None, unsigned char[::1] alive not None):
    """Fraction-free elimination of an int64 matrix in place.

    Returns ``(rank, finished)``.  When ``finished`` is False an int64
    overflow stopped the run; the rank of the original matrix is then
    ``rank`` plus the rank of the rows ``m[alive != 0]``.
    """
    cdef Py_ssize_t nr = m.shape[0], nc = m.shape[1]
    cdef Py_ssize_t i, j, rank = 0
    cdef int status
    if alive.shape[0] != nr:
        raise ValueError("alive must have one flag per row")
    cdef Py_ssize_t *row_nnz = <Py_ssize_t *> malloc((nr + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *col_nnz = <Py_ssize_t *> malloc((nc + 1) * sizeof(Py_ssize_t))
    cdef char *flags = <char *> malloc(nr + 1)
    cdef long long *scratch = <long long *> malloc((nc + 1) * sizeof(long long))
    if row_nnz == NULL or col_nnz == NULL or flags == NULL or scratch == NULL:
        free(row_nnz)
        free(col_nnz)
        free(flags)
        free(scratch)
        raise MemoryError()
    try:
        for j in range(nc):
            col_nnz[j] = 0
        for i in range(nr):
            flags[i] = 1
            row_nnz[i] = 0
            for j in range(nc):
                if m[i, j] == LLONG_MIN:
                    raise OverflowError("entry outside symmetric int64 range")
                if m[i, j] != 0:
                    row_nnz[i] += 1
                    col_nnz[j] += 1
        with nogil:
            status = _eliminate(m, row_nnz, col_nnz, flags, scratch, &rank)
        for i in range(nr):
            alive[i] = 1 if (flags[i] and row_nnz[i] > 0) else 0
        return rank, status == 0
    finally:
        free(row_nnz)
        free(col_nnz)
        free(flags)
        free(scratch)
