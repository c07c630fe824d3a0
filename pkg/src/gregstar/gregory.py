"""Gregory coefficients and their generating function psi(z) = z/ln(1+z)."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .series import RATIONAL, TruncatedSeries

__all__ = [
    "gregory",
    "psi_series",
    "psi_series_by_division",
    "psi_closed_form",
    "psi_boundary",
]


def gregory(n_max: int) -> list[Fraction]:
    """Exact Gregory coefficients G_0..G_{n_max}.

    Computed from the convolution against ln(1+z)/z:
    sum_{k=0}^{n} G_k * (-1)^(n-k)/(n-k+1) = [n == 0].
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    g: list[Fraction] = []
    for n in range(n_max + 1):
        acc = Fraction(1) if n == 0 else Fraction(0)
        for k in range(n):
            acc -= g[k] * Fraction((-1) ** (n - k), n - k + 1)
        g.append(acc)
    return g


def psi_series(order: int, mode: str = RATIONAL) -> TruncatedSeries:
    """Truncated series of z/ln(1+z); coefficient k is the k-th Gregory number."""
    if order < 0:
        raise ValueError("order must be >= 0")
    s = TruncatedSeries(gregory(order))
    return s if mode == RATIONAL else s.to_float()


def psi_series_by_division(order: int) -> TruncatedSeries:
    """Independent construction of psi: reciprocal of the ln(1+z)/z series.

    Kept as a cross-check oracle for :func:`gregory`.
    """
    log_over_z = TruncatedSeries(
        [Fraction((-1) ** k, k + 1) for k in range(order + 1)])
    return TruncatedSeries.one(order) / log_over_z


def psi_closed_form(z: complex) -> complex:
    """psi evaluated from the closed form, valid away from z = 0 and z = -1."""
    z = complex(z)
    if z == 0:
        return 1.0 + 0j
    return z / cmath.log(1 + z)


def psi_boundary(samples: int) -> list[tuple[float, complex]]:
    """Samples of psi(e^{i theta}) along the unit circle.

    Angles are offset by half a step so theta = pi (where ln 0 blows up)
    is never hit.
    """
    if samples < 8:
        raise ValueError("need at least 8 samples")
    step = 2 * math.pi / samples
    out = []
    for j in range(samples):
        theta = (j + 0.25) * step  # quarter-step offset keeps theta != pi
        out.append((theta, psi_closed_form(cmath.exp(1j * theta))))
    return out
