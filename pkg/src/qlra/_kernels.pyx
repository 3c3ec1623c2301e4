# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batched kernels; same contract as ``_kernels_py``."""
import numpy as np

cdef int PK[3]
cdef int PJ[3]
PK[:] = [0, 0, 1]
PJ[:] = [1, 2, 2]


def born_tables(basis, state, double sigma):
    cdef const double[:, :, :, ::1] b = np.ascontiguousarray(basis, dtype=np.float64)
    cdef const double[:, :, ::1] s = np.ascontiguousarray(state, dtype=np.float64)
    cdef Py_ssize_t n_inst = b.shape[0]
    priors_a = np.empty((n_inst, 3))
    b_priors_a = np.empty((n_inst, 3))
    singles_a = np.empty((n_inst, 3, 3))
    pair_a = np.empty((n_inst, 3, 3))
    cdef double[:, ::1] priors = priors_a
    cdef double[:, ::1] b_priors = b_priors_a
    cdef double[:, :, ::1] singles = singles_a
    cdef double[:, :, ::1] pair_num = pair_a
    cdef double ovx[3]
    cdef double ovy[3]
    cdef double subx[3]
    cdef double suby[3]
    cdef Py_ssize_t n, l, i, c
    cdef double bx, by, sx, sy, zx, zy
    for n in range(n_inst):
        for i in range(3):
            ovx[i] = 0.0
            ovy[i] = 0.0
            for l in range(3):
                # conj(b) * s
                bx = b[n, l, i, 0]
                by = -b[n, l, i, 1]
                sx = s[n, l, 0]
                sy = s[n, l, 1]
                ovx[i] += bx * sx + sigma * by * sy
                ovy[i] += bx * sy + by * sx
            priors[n, i] = ovx[i] * ovx[i] - sigma * ovy[i] * ovy[i]
        for l in range(3):
            b_priors[n, l] = s[n, l, 0] * s[n, l, 0] - sigma * s[n, l, 1] * s[n, l, 1]
            for i in range(3):
                bx = b[n, l, i, 0]
                by = b[n, l, i, 1]
                singles[n, l, i] = bx * bx - sigma * by * by
                # conj(ov_i) * conj(b[l, i])
                zx = ovx[i]
                zy = -ovy[i]
                by = -by
                subx[i] = zx * bx + sigma * zy * by
                suby[i] = zx * by + zy * bx
            for c in range(3):
                zx = subx[PK[c]] + subx[PJ[c]]
                zy = suby[PK[c]] + suby[PJ[c]]
                pair_num[n, l, c] = zx * zx - sigma * zy * zy
    return priors_a, b_priors_a, singles_a, pair_a


def gram_residual(mats, double sigma):
    cdef const double[:, :, :, ::1] u = np.ascontiguousarray(mats, dtype=np.float64)
    cdef Py_ssize_t n_inst = u.shape[0]
    out_a = np.empty(n_inst)
    cdef double[::1] out = out_a
    cdef Py_ssize_t n, i, k, m
    cdef double gx, gy, ax, ay, cx, cy, worst
    for n in range(n_inst):
        worst = 0.0
        for i in range(3):
            for k in range(3):
                gx = 0.0
                gy = 0.0
                for m in range(3):
                    ax = u[n, m, i, 0]
                    ay = -u[n, m, i, 1]
                    cx = u[n, m, k, 0]
                    cy = u[n, m, k, 1]
                    gx += ax * cx + sigma * ay * cy
                    gy += ax * cy + ay * cx
                if i == k:
                    gx -= 1.0
                if gx < 0.0:
                    gx = -gx
                if gy < 0.0:
                    gy = -gy
                if gx > worst:
                    worst = gx
                if gy > worst:
                    worst = gy
        out[n] = worst
    return out_a
