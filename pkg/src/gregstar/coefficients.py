"""Taylor and logarithmic coefficients of the starlike class members.

The closed formulas below were obtained by matching the expansion of
z f'(z)/f(z) against psi(omega(z)) and are cross-checked in the test suite
by an independent series solver.  Note the published z^4 coefficient of
psi(omega) contains a misprint (a c2^2 c2 monomial); the correct monomial
is c1^2 c2, as the series oracle confirms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gregory import psi_series
from .series import RATIONAL, QComplex, TruncatedSeries

__all__ = [
    "CoefficientVector",
    "ExtremalFunction",
    "coeffs_from_c",
    "psi_omega_coeffs",
    "solve_subordination",
    "extremal",
    "log_coeffs",
    "vector_from_series",
]

_C_BOUND_TOL = 1e-9


@dataclass(frozen=True)
class CoefficientVector:
    """a2..a5 plus the first three logarithmic coefficients of one function."""

    a2: object
    a3: object
    a4: object
    a5: object
    gamma1: object
    gamma2: object
    gamma3: object

    def to_json_dict(self) -> dict:
        def enc(x):
            if isinstance(x, Fraction):
                return f"{x.numerator}/{x.denominator}"
            if isinstance(x, QComplex):
                return [f"{x.re.numerator}/{x.re.denominator}",
                        f"{x.im.numerator}/{x.im.denominator}"]
            x = complex(x)
            return [x.real, x.imag]

        return {k: enc(getattr(self, k))
                for k in ("a2", "a3", "a4", "a5", "gamma1", "gamma2", "gamma3")}


@dataclass(frozen=True)
class ExtremalFunction:
    """Sharpness witness z*exp(int (psi(t^k)-1)/t dt) with its series."""

    k: int
    series: TruncatedSeries

    def __post_init__(self):
        if self.series.coeffs[0] != 0 or self.series.coeffs[1] != 1:
            raise ValueError("extremal series must be normalized (f(0)=0, f'(0)=1)")


def _gammas(a2, a3, a4):
    g1 = a2 / 2
    g2 = (a3 - a2 * a2 / 2) / 2
    g3 = (a4 - a2 * a3 + a2 ** 3 / 3) / 2
    return g1, g2, g3


def _div(x, num: int, den: int):
    """x * num/den, staying exact for exact scalars."""
    if isinstance(x, (int, Fraction, QComplex)):
        return x * Fraction(num, den)
    return x * num / den


def coeffs_from_c(c1, c2, c3, c4) -> CoefficientVector:
    """Closed-form a2..a5 from the first four Caratheodory coefficients."""
    for n, c in enumerate((c1, c2, c3, c4), start=1):
        if abs(complex(c)) > 2 + _C_BOUND_TOL:
            raise ValueError(f"|c{n}| > 2: input is not a class member")
    a2 = _div(c1, 1, 4)
    a3 = _div(3 * c2 - c1 ** 2, 1, 24)
    a4 = _div(4 * c1 ** 3 - 19 * c1 * c2 + 24 * c3, 1, 288)
    a5 = _div(-(71 * c1 ** 4 + 330 * c2 ** 2 + 600 * c1 * c3
                - 425 * c1 ** 2 * c2 - 720 * c4), 1, 11520)
    return CoefficientVector(a2, a3, a4, a5, *_gammas(a2, a3, a4))


def psi_omega_coeffs(c1, c2, c3, c4):
    """z^1..z^4 coefficients of psi(omega(z)) in terms of c1..c4.

    The z^4 entry is the corrected form (c1^2 c2 monomial); the published
    display misprints it as c2^2 c2.
    """
    q1 = _div(c1, 1, 4)
    q2 = _div(-7 * c1 ** 2 + 12 * c2, 1, 48)
    q3 = _div(17 * c1 ** 3 - 56 * c1 * c2 + 48 * c3, 1, 192)
    q4 = _div(-649 * c1 ** 4 + 3060 * c1 ** 2 * c2 - 3360 * c1 * c3
              - 1680 * c2 ** 2 + 2880 * c4, 1, 11520)
    return q1, q2, q3, q4


def solve_subordination(omega: TruncatedSeries, order: int) -> TruncatedSeries:
    """Solve z f'/f = psi(omega) for the normalized f, through the order.

    Uses the closed form f = z * exp(int (psi(omega(t)) - 1)/t dt); the
    term-by-term recurrence is retained as a test oracle.
    """
    if omega.coeffs[0] != 0:
        raise ValueError("omega must vanish at 0")
    if order < 1:
        raise ValueError("order must be >= 1")
    work = max(order, omega.order)
    psi = psi_series(work, omega.mode)
    q = psi.compose(omega.truncate(work))
    integrand = (q - TruncatedSeries.one(q.order, q.mode)).shift_down()
    f = integrand.integrate().exp().shift_up()
    return f.truncate(order)


def extremal(k: int, order: int | None = None) -> ExtremalFunction:
    """The sharpness witness built from psi(t^k), as an exact rational series."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if order is None:
        order = 4 * k + 2
    n_psi = max(order // k, 1)
    psi = psi_series(n_psi)
    # substitute t^k: spread coefficients k apart
    coeffs = [Fraction(0)] * (order + 1)
    for j, g in enumerate(psi.coeffs):
        if j * k <= order:
            coeffs[j * k] = g
    psi_tk = TruncatedSeries(coeffs, RATIONAL)
    integrand = (psi_tk - TruncatedSeries.one(order)).shift_down()
    f = integrand.integrate().exp().shift_up().truncate(order)
    return ExtremalFunction(k, f)


def log_coeffs(f: TruncatedSeries):
    """First three logarithmic coefficients: half the series of log(f/z)."""
    if f.coeffs[0] != 0 or f.coeffs[1] != 1:
        raise ValueError("f must satisfy f(0)=0 and f'(0)=1")
    if f.order < 4:
        raise ValueError("need the series through z^4")
    lf = f.shift_down().log()
    return tuple(_div(lf.coeffs[n], 1, 2) for n in (1, 2, 3))


def vector_from_series(f: TruncatedSeries) -> CoefficientVector:
    """Read a2..a5 and the gammas off a normalized series (order >= 5)."""
    if f.order < 5:
        raise ValueError("need the series through z^5")
    a2, a3, a4, a5 = f.coeffs[2], f.coeffs[3], f.coeffs[4], f.coeffs[5]
    return CoefficientVector(a2, a3, a4, a5, *_gammas(a2, a3, a4))
