# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled kernels: implicit-shift QL eigenvalues and pivoted tridiagonal
LU solves.  Mirrors _ql_py operation-for-operation — keep in lockstep."""
from libc.math cimport fabs, sqrt

import numpy as np

BACKEND_NAME = "compiled"


def ql_eigenvalues(double[::1] d, double[::1] e, int max_sweeps=50):
    """Same contract as _ql_py.ql_eigenvalues; here e is clobbered in place
    (its contents are unspecified afterwards under either backend)."""
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t low, m, i, fail
    cdef double s, r, g, c, p, f, b, sgn
    cdef int sweeps, broke
    if e.shape[0] < n:
        raise ValueError("e must have length n (last slot zero)")
    if n == 1:
        return -1
    fail = -1
    with nogil:
        for low in range(n):
            sweeps = 0
            while True:
                m = low
                while m < n - 1:
                    s = fabs(d[m]) + fabs(d[m + 1])
                    if fabs(e[m]) <= 2.3e-16 * s or e[m] == 0.0:
                        break
                    m += 1
                if m == low:
                    break
                sweeps += 1
                if sweeps > max_sweeps:
                    fail = low
                    break
                g = (d[low + 1] - d[low]) / (2.0 * e[low])
                r = sqrt(g * g + 1.0)
                sgn = r if g >= 0.0 else -r
                g = d[m] - d[low] + e[low] / (g + sgn)
                s = 1.0
                c = 1.0
                p = 0.0
                broke = 0
                for i in range(m - 1, low - 1, -1):
                    f = s * e[i]
                    b = c * e[i]
                    r = sqrt(f * f + g * g)
                    e[i + 1] = r
                    if r == 0.0:
                        d[i + 1] -= p
                        e[m] = 0.0
                        broke = 1
                        break
                    s = f / r
                    c = g / r
                    g = d[i + 1] - p
                    r = (d[i] - g) * s + 2.0 * c * b
                    p = s * r
                    d[i + 1] = g + p
                    g = c * r - b
                if broke == 0:
                    d[low] -= p
                    e[low] = g
                    e[m] = 0.0
            if fail >= 0:
                break
    return fail


def lu_factor(double[::1] d, double[::1] e, double shift):
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t i
    low_np = np.zeros(n, dtype=np.float64)
    u0_np = np.empty(n, dtype=np.float64)
    u1_np = np.zeros(n, dtype=np.float64)
    u2_np = np.zeros(n, dtype=np.float64)
    piv_np = np.zeros(n, dtype=np.uint8)
    bsub_np = np.zeros(n, dtype=np.float64)
    cdef double[::1] low = low_np
    cdef double[::1] u0 = u0_np
    cdef double[::1] u1 = u1_np
    cdef double[::1] u2 = u2_np
    cdef double[::1] bsub = bsub_np
    cdef unsigned char[::1] piv = piv_np
    cdef double tmp, mlt
    with nogil:
        for i in range(n):
            u0[i] = d[i] - shift
        for i in range(n - 1):
            bsub[i] = e[i]
            u1[i] = e[i]
        for i in range(n - 1):
            if fabs(bsub[i]) > fabs(u0[i]):
                piv[i] = 1
                tmp = u0[i]; u0[i] = bsub[i]; bsub[i] = tmp
                tmp = u1[i]; u1[i] = u0[i + 1]; u0[i + 1] = tmp
                if i < n - 2:
                    tmp = u2[i]; u2[i] = u1[i + 1]; u1[i + 1] = tmp
            if u0[i] == 0.0:
                u0[i] = 1e-300
            mlt = bsub[i] / u0[i]
            low[i] = mlt
            u0[i + 1] -= mlt * u1[i]
            if i < n - 2:
                u1[i + 1] -= mlt * u2[i]
        if u0[n - 1] == 0.0:
            u0[n - 1] = 1e-300
    return low_np, u0_np, u1_np, u2_np, piv_np


def lu_solve(double[::1] low, double[::1] u0, double[::1] u1, double[::1] u2,
             unsigned char[::1] piv, double[::1] b):
    cdef Py_ssize_t n = u0.shape[0]
    cdef Py_ssize_t i
    x_np = np.zeros(n, dtype=np.float64)
    y_np = np.empty(n, dtype=np.float64)
    cdef double[::1] x = x_np
    cdef double[::1] y = y_np
    cdef double tmp
    with nogil:
        for i in range(n):
            y[i] = b[i]
        for i in range(n - 1):
            if piv[i]:
                tmp = y[i]; y[i] = y[i + 1]; y[i + 1] = tmp
            y[i + 1] -= low[i] * y[i]
        x[n - 1] = y[n - 1] / u0[n - 1]
        if n >= 2:
            x[n - 2] = (y[n - 2] - u1[n - 2] * x[n - 1]) / u0[n - 2]
        for i in range(n - 3, -1, -1):
            x[i] = (y[i] - u1[i] * x[i + 1] - u2[i] * x[i + 2]) / u0[i]
    return x_np
