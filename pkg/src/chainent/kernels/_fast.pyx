# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python kernels (see `chainent.kernels._pure`)."""

from libc.math cimport cos, fabs

import numpy as np

BACKEND_NAME = "cython"

cdef double TWO_PI = 6.283185307179586476925287


def hyp2f1_series(double a, double b, double c, double x, double tol,
                  long max_terms):
    """Gauss series for 2F1; same term-by-term arithmetic as the pure twin."""
    cdef double total = 1.0
    cdef double term = 1.0
    cdef long k = 0
    cdef int below = 0
    while k < max_terms:
        term *= (a + k) * (b + k) / ((c + k) * (1.0 + k)) * x
        total += term
        k += 1
        if fabs(term) < tol:
            below += 1
            if below >= 2:
                return total, True
        else:
            below = 0
    return total, False


def cosine_lag_sums(weights, long l_max):
    """Direct spectral sums over all lags with Kahan-compensated accumulation."""
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    out_arr = np.zeros(l_max + 1, dtype=np.float64)
    comp_arr = np.zeros(l_max + 1, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double[::1] comp = comp_arr
    cdef Py_ssize_t n = w.shape[0]
    cdef Py_ssize_t k
    cdef long l
    cdef double step = TWO_PI / n
    cdef double wk, c1, cos_prev, cos_cur, cos_next, y, t
    for k in range(n):
        wk = w[k]
        c1 = cos(step * k)
        # l = 0
        y = wk - comp[0]
        t = out[0] + y
        comp[0] = (t - out[0]) - y
        out[0] = t
        if l_max == 0:
            continue
        # l = 1
        y = wk * c1 - comp[1]
        t = out[1] + y
        comp[1] = (t - out[1]) - y
        out[1] = t
        cos_prev = 1.0
        cos_cur = c1
        for l in range(2, l_max + 1):
            cos_next = 2.0 * c1 * cos_cur - cos_prev
            cos_prev = cos_cur
            cos_cur = cos_next
            y = wk * cos_next - comp[l]
            t = out[l] + y
            comp[l] = (t - out[l]) - y
            out[l] = t
    return out_arr
