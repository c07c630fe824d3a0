"""Numpy fallback for the hot grid-scan kernels."""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def disk_quad_grid(A, B, C, rs, thetas):
    """Values of |A + B z + C z^2| + 1 - |z|^2 on the polar grid rs x thetas."""
    r = np.asarray(rs, dtype=np.float64)[:, None]
    t = np.asarray(thetas, dtype=np.float64)[None, :]
    z = r * np.exp(1j * t)
    return np.abs(A + B * z + C * z * z) + 1.0 - r * r


def disk_quad_window_max(A, B, C, r0, r1, t0, t1, nr, nt):
    """Max of the disk quadratic objective over an nr x nt window grid."""
    rs = np.linspace(r0, r1, nr)
    ts = np.linspace(t0, t1, nt)
    vals = disk_quad_grid(A, B, C, rs, ts)
    k = int(np.argmax(vals))
    i, j = divmod(k, nt)
    return float(vals[i, j]), float(rs[i]), float(ts[j])


def hankel_tau_max(tau1s, rs, phis, psis):
    """Max of |H(tau1, r e^{i phi}, e^{i psi})| over the 4-d grid.

    Returns (value, (i_tau1, i_r, i_phi, i_psi)).
    """
    tau1s = np.asarray(tau1s, dtype=np.float64)
    rs = np.asarray(rs, dtype=np.float64)
    phis = np.asarray(phis, dtype=np.float64)
    psis = np.asarray(psis, dtype=np.float64)

    t2 = rs[:, None] * np.exp(1j * phis[None, :])        # (nr, nphi)
    e_psi = np.exp(1j * psis)                            # (npsi,)
    best = -np.inf
    arg = (0, 0, 0, 0)
    for i1, t1 in enumerate(tau1s):
        s = 1.0 - t1 * t1
        x = (3 * t1 ** 4 - 4 * t1 ** 2 * s * t2
             - 12 * s * (3 + t1 * t1) * t2 * t2) / 2304.0   # (nr, nphi)
        w = 48.0 * t1 * s * (1.0 - rs * rs) / 2304.0        # (nr,)
        vals = np.abs(x[:, :, None] + w[:, None, None] * e_psi[None, None, :])
        k = int(np.argmax(vals))
        v = float(vals.flat[k])
        if v > best:
            best = v
            ir, rem = divmod(k, vals.shape[1] * vals.shape[2])
            ip, iq = divmod(rem, vals.shape[2])
            arg = (i1, ir, ip, iq)
    return best, arg
