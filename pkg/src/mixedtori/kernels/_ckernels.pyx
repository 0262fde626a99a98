# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops; contract identical to ``_pykernels``."""
import numpy as np

from libc.math cimport atan2, fabs, sqrt, INFINITY
from libc.stdint cimport int64_t


cdef inline Py_ssize_t _wrap(int64_t e, Py_ssize_t j, Py_ssize_t n) nogil:
    cdef int64_t r = (e * j) % n
    if r < 0:
        r += n
    return <Py_ssize_t>r


cdef inline double _abs2(double complex z) nogil:
    return z.real * z.real + z.imag * z.imag


def torus_grid_min(const double complex[::1] c, const int64_t[::1] p,
                   const int64_t[::1] q, const double complex[::1] table):
    cdef Py_ssize_t G = table.shape[0]
    cdef Py_ssize_t M = c.shape[0]
    cdef Py_ssize_t j, k, m
    cdef double best = INFINITY
    cdef double a2
    cdef Py_ssize_t bj = 0, bk = 0
    cdef double complex val
    cdef double complex[:, ::1] cphi = np.empty((G, M), dtype=np.complex128)
    # index of e^{i q_m t_k} advanced by a fixed step instead of a modulo per term
    cdef int64_t[::1] stride = np.empty(M, dtype=np.int64)
    cdef int64_t[::1] pos = np.empty(M, dtype=np.int64)
    with nogil:
        for m in range(M):
            stride[m] = _wrap(q[m], 1, G)
        for j in range(G):
            for m in range(M):
                cphi[j, m] = c[m] * table[_wrap(p[m], j, G)]
        for j in range(G):
            for m in range(M):
                pos[m] = 0
            for k in range(G):
                val = 0
                for m in range(M):
                    val = val + cphi[j, m] * table[pos[m]]
                    pos[m] += stride[m]
                    if pos[m] >= G:
                        pos[m] -= G
                a2 = _abs2(val)
                if a2 < best:
                    best = a2
                    bj = j
                    bk = k
    return sqrt(best), bj, bk


def circle_walk(const double complex[::1] a, const int64_t[::1] s,
                const double complex[::1] table):
    cdef Py_ssize_t S = table.shape[0]
    cdef Py_ssize_t M = a.shape[0]
    cdef Py_ssize_t k, m
    cdef double complex first = 0, prev, val, d
    cdef double total = 0.0, step, max_step = 0.0
    cdef double lo, hi, a2
    cdef int64_t[::1] stride = np.empty(M, dtype=np.int64)
    cdef int64_t[::1] pos = np.empty(M, dtype=np.int64)
    with nogil:
        for m in range(M):
            stride[m] = _wrap(s[m], 1, S)
            pos[m] = stride[m]
        for m in range(M):
            first = first + a[m]
        prev = first
        lo = _abs2(first)
        hi = lo
        for k in range(1, S + 1):
            if k < S:
                val = 0
                for m in range(M):
                    val = val + a[m] * table[pos[m]]
                    pos[m] += stride[m]
                    if pos[m] >= S:
                        pos[m] -= S
            else:
                val = first
            d = val * prev.conjugate()
            step = atan2(d.imag, d.real)
            total += step
            if fabs(step) > max_step:
                max_step = fabs(step)
            a2 = _abs2(val)
            if a2 < lo:
                lo = a2
            if a2 > hi:
                hi = a2
            prev = val
    return total, max_step, sqrt(lo), sqrt(hi)
