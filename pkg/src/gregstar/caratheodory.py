"""The class of positive-real-part functions: parameterization and sampling.

Two constructions are provided:

* the three-parameter (tau1, tau2, tau3) coordinates with their explicit
  degree-3 rational function, which pins down c1, c2, c3;
* convex combinations of boundary kernels (1 + u z)/(1 - u z) with |u| = 1,
  which always yield genuine class members and give access to c4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .series import COMPLEX, RATIONAL, QComplex, TruncatedSeries

__all__ = [
    "CaratheodoryParams",
    "KernelMix",
    "c_from_tau",
    "p_from_tau",
    "sample_p",
    "p_from_atoms",
    "kernel_coefficients",
    "schwarz_from_p",
    "p_from_schwarz",
    "unit_rational",
    "random_mix",
]

_TOL = 1e-12


def _abs2(x):
    if isinstance(x, QComplex):
        return x.abs2()
    if isinstance(x, (int, Fraction)):
        return x * x
    return abs(x) ** 2


def _conj(x):
    if isinstance(x, (int, float, Fraction)):
        return x
    return x.conjugate()


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, QComplex))


@dataclass(frozen=True)
class CaratheodoryParams:
    """Coordinates (tau1, tau2, tau3): tau1 in [0,1], |tau2| <= 1, |tau3| <= 1."""

    tau1: object
    tau2: object
    tau3: object

    def __post_init__(self):
        t1 = self.tau1
        if isinstance(t1, complex):
            raise ValueError("tau1 must be real")
        if not 0 <= float(t1) <= 1 + _TOL:
            raise ValueError(f"tau1={t1} outside [0, 1]")
        for name, t in (("tau2", self.tau2), ("tau3", self.tau3)):
            if float(_abs2(t)) > 1 + _TOL:
                raise ValueError(f"|{name}| > 1")

    @property
    def exact(self) -> bool:
        return all(_is_exact(t) for t in (self.tau1, self.tau2, self.tau3))


@dataclass(frozen=True)
class KernelMix:
    """Convex combination of unit-circle kernels: weights and angles."""

    weights: tuple
    angles: tuple

    def __post_init__(self):
        if len(self.weights) != len(self.angles):
            raise ValueError("weights and angles must have equal length")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")
        if abs(math.fsum(self.weights) - 1.0) > _TOL:
            raise ValueError("weights must sum to 1")


def c_from_tau(params: CaratheodoryParams):
    """The coefficients (c1, c2, c3) determined by the tau coordinates."""
    t1, t2, t3 = params.tau1, params.tau2, params.tau3
    s = 1 - t1 * t1
    c1 = 2 * t1
    c2 = 2 * t1 * t1 + 2 * s * t2
    c3 = (2 * t1 ** 3 + 4 * s * t1 * t2 - 2 * s * t1 * t2 * t2
          + 2 * s * (1 - _abs2(t2)) * t3)
    return c1, c2, c3


def p_from_tau(params: CaratheodoryParams, order: int) -> TruncatedSeries:
    """Series of the explicit rational function carrying the tau coordinates.

    For tau1 = 1 this is (1 + z)/(1 - z); otherwise the degree-3
    Blaschke-style form is used (interior parameters make the representing
    function non-unique, but the first three coefficients are pinned).
    """
    t1, t2, t3 = params.tau1, params.tau2, params.tau3
    exact = params.exact
    mode = RATIONAL if exact else COMPLEX
    zero = Fraction(0) if exact else 0j
    one = Fraction(1) if exact else 1 + 0j

    at_boundary = (t1 == 1) if exact else abs(float(t1) - 1.0) < _TOL
    if at_boundary:
        num = TruncatedSeries([one, t1] + [zero] * max(order - 1, 0), mode)
        den = TruncatedSeries([one, -t1] + [zero] * max(order - 1, 0), mode)
        return num / den

    b1, b2, b3 = _conj(t1), _conj(t2), _conj(t3)
    n1 = b2 * t3 + b1 * t2 + t1
    n2 = b1 * t3 + t1 * b2 * t3 + t2
    d1 = b2 * t3 + b1 * t2 - t1
    d2 = b1 * t3 - t1 * b2 * t3 - t2
    pad = [zero] * max(order - 3, 0)
    num = TruncatedSeries([one, n1, n2, t3][: order + 1] + pad, mode)
    den = TruncatedSeries([one, d1, d2, -t3][: order + 1] + pad, mode)
    return (num / den).truncate(order)


def kernel_coefficients(mix: KernelMix, n_max: int) -> list[complex]:
    """c_1..c_{n_max} of the mixed kernel p(z) = sum w_i (1+u_i z)/(1-u_i z)."""
    u = np.exp(1j * np.asarray(mix.angles))
    w = np.asarray(mix.weights)
    return [complex(2 * np.sum(w * u ** n)) for n in range(1, n_max + 1)]


def sample_p(mix: KernelMix, order: int) -> TruncatedSeries:
    """Series of the convex kernel combination; always a valid class member."""
    cs = kernel_coefficients(mix, order)
    return TruncatedSeries([1 + 0j, *cs], COMPLEX)


def p_from_atoms(weights: Sequence, atoms: Sequence, order: int) -> TruncatedSeries:
    """Kernel mix with explicit unit-modulus atoms; exact when inputs are exact.

    With rational weights and atoms from :func:`unit_rational` the resulting
    coefficients are exact rational complex numbers.
    """
    exact = all(_is_exact(x) for x in list(weights) + list(atoms))
    mode = RATIONAL if exact else COMPLEX
    coeffs = [Fraction(1) if exact else 1 + 0j]
    for n in range(1, order + 1):
        acc = Fraction(0) if exact else 0j
        for w, u in zip(weights, atoms):
            acc = acc + 2 * w * u ** n
        coeffs.append(acc)
    return TruncatedSeries(coeffs, mode)


def unit_rational(t) -> QComplex:
    """Exact point on the unit circle: ((1 - t^2) + 2 t i)/(1 + t^2)."""
    t = Fraction(t)
    d = 1 + t * t
    return QComplex((1 - t * t) / d, 2 * t / d)


def schwarz_from_p(p: TruncatedSeries) -> TruncatedSeries:
    """omega = (p - 1)/(p + 1); maps a class member to a Schwarz function."""
    if p.coeffs[0] != 1:
        raise ValueError("p must have constant term 1")
    one = TruncatedSeries.one(p.order, p.mode)
    return (p - one) / (p + one)


def p_from_schwarz(omega: TruncatedSeries) -> TruncatedSeries:
    """Inverse transform p = (1 + omega)/(1 - omega)."""
    if omega.coeffs[0] != 0:
        raise ValueError("omega must vanish at 0")
    one = TruncatedSeries.one(omega.order, omega.mode)
    return (one + omega) / (one - omega)


def random_mix(rng: np.random.Generator, m: int = 4) -> KernelMix:
    """Random kernel mix with m atoms; weights normalized uniforms."""
    w = rng.random(m)
    w = w / w.sum()
    # nudge the normalized sum onto 1 exactly for the dataclass invariant
    w[-1] = 1.0 - math.fsum(w[:-1])
    angles = rng.uniform(0.0, 2 * math.pi, m)
    return KernelMix(tuple(w.tolist()), tuple(angles.tolist()))
