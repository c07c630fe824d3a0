"""Verification lab for sharp coefficient bounds of starlike functions
whose subordinating function is generated by the Gregory coefficients."""

from .backend import BACKEND
from .series import QComplex, TruncatedSeries
from .gregory import gregory, psi_series
from .coefficients import coeffs_from_c, extremal, solve_subordination

__all__ = [
    "BACKEND",
    "QComplex",
    "TruncatedSeries",
    "gregory",
    "psi_series",
    "coeffs_from_c",
    "extremal",
    "solve_subordination",
]

__version__ = "0.1.0"
