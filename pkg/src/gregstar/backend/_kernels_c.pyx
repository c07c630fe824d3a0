# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid-scan kernels; mirrors the numpy fallback module."""

from libc.math cimport cos, sin, sqrt, INFINITY

import numpy as np

NAME = "cython"


def disk_quad_grid(double A, double B, double C, rs, thetas):
    """Values of |A + B z + C z^2| + 1 - |z|^2 on the polar grid rs x thetas."""
    cdef double[:] r = np.ascontiguousarray(rs, dtype=np.float64)
    cdef double[:] t = np.ascontiguousarray(thetas, dtype=np.float64)
    cdef Py_ssize_t nr = r.shape[0], nt = t.shape[0]
    out_arr = np.empty((nr, nt), dtype=np.float64)
    cdef double[:, :] out = out_arr
    cdef double[:] ct_tab = np.cos(np.asarray(t))
    cdef double[:] st_tab = np.sin(np.asarray(t))
    cdef Py_ssize_t i, j
    cdef double ri, zr, zi, z2r, z2i, qr, qi
    for i in range(nr):
        ri = r[i]
        for j in range(nt):
            zr = ri * ct_tab[j]
            zi = ri * st_tab[j]
            z2r = zr * zr - zi * zi
            z2i = 2.0 * zr * zi
            qr = A + B * zr + C * z2r
            qi = B * zi + C * z2i
            out[i, j] = sqrt(qr * qr + qi * qi) + 1.0 - ri * ri
    return out_arr


def disk_quad_window_max(double A, double B, double C,
                         double r0, double r1, double t0, double t1,
                         Py_ssize_t nr, Py_ssize_t nt):
    """Max of the disk quadratic objective over an nr x nt window grid."""
    cdef double best = -INFINITY
    cdef double dr = (r1 - r0) / (nr - 1) if nr > 1 else 0.0
    cdef double dt = (t1 - t0) / (nt - 1) if nt > 1 else 0.0
    cdef Py_ssize_t i, j
    cdef double ri, tj, ct, st, zr, zi, qr, qi, v
    cdef double br = r0, bt = t0
    for i in range(nr):
        ri = r0 + dr * i
        for j in range(nt):
            tj = t0 + dt * j
            ct = cos(tj)
            st = sin(tj)
            zr = ri * ct
            zi = ri * st
            qr = A + B * zr + C * (zr * zr - zi * zi)
            qi = B * zi + C * 2.0 * zr * zi
            v = sqrt(qr * qr + qi * qi) + 1.0 - ri * ri
            if v > best:
                best = v
                br = ri
                bt = tj
    return best, br, bt


def hankel_tau_max(tau1s, rs, phis, psis):
    """Max of |H(tau1, r e^{i phi}, e^{i psi})| over the 4-d grid.

    Returns (value, (i_tau1, i_r, i_phi, i_psi)).
    """
    cdef double[:] t1v = np.ascontiguousarray(tau1s, dtype=np.float64)
    cdef double[:] rv = np.ascontiguousarray(rs, dtype=np.float64)
    cdef double[:] pv = np.ascontiguousarray(phis, dtype=np.float64)
    cdef double[:] qv = np.ascontiguousarray(psis, dtype=np.float64)
    cdef Py_ssize_t n1 = t1v.shape[0], nr = rv.shape[0]
    cdef Py_ssize_t np_ = pv.shape[0], nq = qv.shape[0]
    cdef double[:] cp = np.cos(np.asarray(pv))
    cdef double[:] sp = np.sin(np.asarray(pv))
    cdef double[:] cq = np.cos(np.asarray(qv))
    cdef double[:] sq = np.sin(np.asarray(qv))
    cdef double best = -INFINITY     # squared magnitude while scanning
    cdef Py_ssize_t b1 = 0, br = 0, bp = 0, bq = 0
    cdef Py_ssize_t i1, ir, ip, iq
    cdef double t1, s, r, t2r, t2i, t2sq_r, t2sq_i
    cdef double xr, xi, w, vr, vi, v, quad
    cdef double c0, c2coef, c2sqcoef
    for i1 in range(n1):
        t1 = t1v[i1]
        s = 1.0 - t1 * t1
        c0 = 3.0 * t1 * t1 * t1 * t1
        c2coef = -4.0 * t1 * t1 * s
        c2sqcoef = -12.0 * s * (3.0 + t1 * t1)
        for ir in range(nr):
            r = rv[ir]
            w = 48.0 * t1 * s * (1.0 - r * r) / 2304.0
            for ip in range(np_):
                t2r = r * cp[ip]
                t2i = r * sp[ip]
                t2sq_r = t2r * t2r - t2i * t2i
                t2sq_i = 2.0 * t2r * t2i
                xr = (c0 + c2coef * t2r + c2sqcoef * t2sq_r) / 2304.0
                xi = (c2coef * t2i + c2sqcoef * t2sq_i) / 2304.0
                for iq in range(nq):
                    vr = xr + w * cq[iq]
                    vi = xi + w * sq[iq]
                    v = vr * vr + vi * vi
                    if v > best:
                        best = v
                        b1 = i1
                        br = ir
                        bp = ip
                        bq = iq
    return sqrt(best), (b1, br, bp, bq)
