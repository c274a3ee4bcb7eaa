# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the integer kernels.

Everything runs in int64 with explicit overflow checks; an overflow raises
OverflowError and the dispatcher retries with the pure-Python version.
"""
from libc.math cimport sqrt
from libc.stdlib cimport malloc, free


cdef extern from *:
    """
    static inline int ack_mul(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    static inline int ack_add(long long a, long long b, long long *r) { return __builtin_add_overflow(a, b, r); }
    """
    int ack_mul(long long a, long long b, long long *r) nogil
    int ack_add(long long a, long long b, long long *r) nogil


cdef inline long long _muladd(long long acc, long long x, long long y) except? -1:
    cdef long long t
    if ack_mul(x, y, &t) or ack_add(acc, t, &acc):
        raise OverflowError("int64 overflow in kernel")
    return acc


def convolve(a, b, Py_ssize_t n):
    cdef Py_ssize_t la = min(len(a), n + 1), lb = min(len(b), n + 1)
    cdef Py_ssize_t i, j
    cdef long long *pa = <long long *> malloc((la + 1) * sizeof(long long))
    cdef long long *pb = <long long *> malloc((lb + 1) * sizeof(long long))
    cdef long long *out = <long long *> malloc((n + 1) * sizeof(long long))
    if pa == NULL or pb == NULL or out == NULL:
        free(pa); free(pb); free(out)
        raise MemoryError()
    try:
        for i in range(la):
            pa[i] = a[i]
        for j in range(lb):
            pb[j] = b[j]
        for i in range(n + 1):
            out[i] = 0
        for i in range(la):
            if pa[i] == 0:
                continue
            for j in range(min(lb, n + 1 - i)):
                out[i + j] = _muladd(out[i + j], pa[i], pb[j])
        return [out[i] for i in range(n + 1)]
    finally:
        free(pa); free(pb); free(out)


def euler_inverse_power(long long dim, Py_ssize_t n):
    cdef Py_ssize_t d, m, j
    cdef long long acc
    cdef long long *sigma = <long long *> malloc((n + 1) * sizeof(long long))
    cdef long long *p = <long long *> malloc((n + 1) * sizeof(long long))
    if sigma == NULL or p == NULL:
        free(sigma); free(p)
        raise MemoryError()
    try:
        for m in range(n + 1):
            sigma[m] = 0
        for d in range(1, n + 1):
            for m in range(d, n + 1, d):
                sigma[m] += d
        p[0] = 1
        for m in range(1, n + 1):
            acc = 0
            for j in range(1, m + 1):
                acc = _muladd(acc, sigma[j], p[m - j])
            acc = _muladd(0, acc, dim)
            p[m] = acc // m
        return [p[m] for m in range(n + 1)]
    finally:
        free(sigma); free(p)


cdef long long _isqrt(long long v) except? -1:
    cdef long long r = <long long> sqrt(<double> v)
    cdef long long sq
    while r > 0 and _muladd(0, r, r) > v:
        r -= 1
    while True:
        sq = _muladd(0, r + 1, r + 1)
        if sq > v:
            return r
        r += 1


cdef int _walk(Py_ssize_t i, Py_ssize_t d, long long **P, long long *m, long long *sh,
               long long step, long long vmax, long long *y, dict counts) except -1:
    cdef Py_ssize_t w = d - i, j, l
    cdef long long *Pi = P[i]
    cdef long long A = Pi[0], B = 0, C = 0, bound, disc, r, t_lo, t_hi, n_lo, n_hi, n, t, q, row
    for j in range(1, w):
        B = _muladd(B, Pi[j], y[i + j])
        row = 0
        for l in range(1, w):
            row = _muladd(row, Pi[j * w + l], y[i + l])
        C = _muladd(C, row, y[i + j])
    bound = _muladd(0, m[i], vmax)
    disc = _muladd(_muladd(0, B, B), -A, _muladd(C, -1, bound))
    if disc < 0:
        return 0
    r = _isqrt(disc) + 1
    t_lo = (-B - r) // A
    t_hi = (-B + r) // A + 1
    n_lo = -((sh[i] - t_lo) // step)
    n_hi = (t_hi - sh[i]) // step
    for n in range(n_lo, n_hi + 1):
        t = _muladd(sh[i], step, n)
        q = _muladd(_muladd(C, _muladd(0, 2, B), t), _muladd(0, A, t), t)
        if q > bound:
            continue
        y[i] = t
        if i:
            _walk(i - 1, d, P, m, sh, step, vmax, y, counts)
        else:
            counts[q] = counts.get(q, 0) + 1
    return 0


def theta_counts(levels, shift, long long step, long long vmax):
    cdef Py_ssize_t d = len(shift)
    cdef Py_ssize_t i, j, l, w
    counts = {}
    if d == 0:
        if vmax >= 0:
            counts[0] = 1
        return counts
    cdef long long **P = <long long **> malloc(d * sizeof(long long *))
    cdef long long *m = <long long *> malloc(d * sizeof(long long))
    cdef long long *sh = <long long *> malloc(d * sizeof(long long))
    cdef long long *y = <long long *> malloc(d * sizeof(long long))
    if P == NULL or m == NULL or sh == NULL or y == NULL:
        free(P); free(m); free(sh); free(y)
        raise MemoryError()
    for i in range(d):
        P[i] = NULL
    try:
        for i in range(d):
            w = d - i
            P[i] = <long long *> malloc(w * w * sizeof(long long))
            if P[i] == NULL:
                raise MemoryError()
            mi, Pi = levels[i]
            m[i] = mi
            for j in range(w):
                for l in range(w):
                    P[i][j * w + l] = Pi[j][l]
            sh[i] = shift[i]
            y[i] = 0
        _walk(d - 1, d, P, m, sh, step, vmax, y, counts)
        return counts
    finally:
        for i in range(d):
            free(P[i])
        free(P); free(m); free(sh); free(y)
