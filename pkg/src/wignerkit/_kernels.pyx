# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: autocorrelation contraction and advection stencil.

Mirrors the signatures in ``wignerkit._kernels_py``.
"""

import numpy as np

BACKEND = "compiled"


def contract_real(weighted, phases):
    """Real part of ``weighted @ phases`` and the max |imaginary| entry."""
    A = np.ascontiguousarray(weighted, dtype=np.complex128)
    B = np.ascontiguousarray(phases, dtype=np.complex128)
    cdef double complex[:, ::1] a = A
    cdef double complex[:, ::1] b = B
    cdef Py_ssize_t n = a.shape[0], m = a.shape[1], q = b.shape[1]
    if b.shape[0] != m:
        raise ValueError("shape mismatch")
    out_re = np.zeros((n, q))
    out_im = np.zeros((n, q))
    cdef double[:, ::1] ore = out_re
    cdef double[:, ::1] oim = out_im
    cdef Py_ssize_t i, j, k
    cdef double ar, ai, br, bi
    cdef double imag_max = 0.0, v
    for i in range(n):
        for k in range(m):
            ar = a[i, k].real
            ai = a[i, k].imag
            for j in range(q):
                br = b[k, j].real
                bi = b[k, j].imag
                ore[i, j] += ar * br - ai * bi
                oim[i, j] += ar * bi + ai * br
    for i in range(n):
        for j in range(q):
            v = oim[i, j]
            if v < 0.0:
                v = -v
            if v > imag_max:
                imag_max = v
    return out_re, imag_max


def advect_rhs(f, hx, hp, double dx, double dp):
    """hx * df/dp - hp * df/dx with a fused 4th-order stencil, zero padded."""
    F = np.ascontiguousarray(f, dtype=np.float64)
    HX = np.ascontiguousarray(hx, dtype=np.float64)
    HP = np.ascontiguousarray(hp, dtype=np.float64)
    cdef double[:, ::1] ff = F
    cdef double[:, ::1] gx = HX
    cdef double[:, ::1] gp = HP
    cdef Py_ssize_t n = ff.shape[0], m = ff.shape[1]
    out = np.empty((n, m))
    cdef double[:, ::1] o = out
    cdef Py_ssize_t i, j
    cdef double c0 = 1.0 / 12.0, c1 = -8.0 / 12.0, c2 = 8.0 / 12.0, c3 = -1.0 / 12.0
    cdef double inv_dx = 1.0 / dx, inv_dp = 1.0 / dp
    cdef double fp, fx
    for i in range(n):
        for j in range(m):
            fp = 0.0
            if j >= 2:
                fp += c0 * ff[i, j - 2]
            if j >= 1:
                fp += c1 * ff[i, j - 1]
            if j + 1 < m:
                fp += c2 * ff[i, j + 1]
            if j + 2 < m:
                fp += c3 * ff[i, j + 2]
            fx = 0.0
            if i >= 2:
                fx += c0 * ff[i - 2, j]
            if i >= 1:
                fx += c1 * ff[i - 1, j]
            if i + 1 < n:
                fx += c2 * ff[i + 1, j]
            if i + 2 < n:
                fx += c3 * ff[i + 2, j]
            o[i, j] = gx[i, j] * fp * inv_dp - gp[i, j] * fx * inv_dx
    return out
