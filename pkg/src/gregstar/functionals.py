"""The four coefficient functionals under test and their closed-form bounds.

Each functional has an alternative computation path in terms of the
Caratheodory coefficients; the paths must agree (exactly on exact inputs),
which the constructors assert.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coefficients import CoefficientVector
from .series import QComplex

__all__ = [
    "FunctionalReport",
    "hankel_log",
    "hankel_log_from_c",
    "hankel_log_from_params",
    "fekete_szego",
    "fekete_bound",
    "zalcman",
    "zalcman_from_c",
    "gen_zalcman",
    "gen_zalcman_from_c",
    "ma_minda_bound",
    "zalcman_lemma_margin",
    "gen_zalcman_lemma_bounds",
    "ZALCMAN_LAMBDA",
    "ZALCMAN_A",
    "ZALCMAN_B",
    "ZALCMAN_BETA",
    "GEN_ZALCMAN_B",
    "GEN_ZALCMAN_D",
]

# Constants of the quartic Caratheodory-coefficient form of a3^2 - a5,
# re-derived from the closed a-formulas and confirmed by the series oracle.
ZALCMAN_LAMBDA = Fraction(91, 720)
ZALCMAN_A = Fraction(17, 24)
ZALCMAN_B = Fraction(5, 12)
ZALCMAN_BETA = Fraction(109, 216)

# Constants of the cubic form of a2 a3 - a4.
GEN_ZALCMAN_B = Fraction(7, 12)
GEN_ZALCMAN_D = Fraction(7, 24)

_PATH_TOL = 1e-9


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, QComplex))


def _assert_close(lhs, rhs, what: str):
    if _is_exact(lhs) and _is_exact(rhs):
        if lhs != rhs:
            raise AssertionError(f"{what}: exact paths disagree ({lhs} vs {rhs})")
    elif abs(complex(lhs) - complex(rhs)) > _PATH_TOL:
        raise AssertionError(f"{what}: paths disagree beyond {_PATH_TOL}")


@dataclass(frozen=True)
class FunctionalReport:
    """One functional evaluated at one function, against its claimed bound."""

    name: str
    value: object
    magnitude: float
    bound: Fraction
    attained: bool

    @classmethod
    def build(cls, name: str, value, bound: Fraction,
              tolerance: float = 1e-9) -> "FunctionalReport":
        mag = abs(complex(value))
        if _is_exact(value):
            attained = _exact_abs2(value) == bound * bound
        else:
            attained = abs(mag - float(bound)) <= tolerance
        return cls(name, value, mag, bound, attained)

    def to_json_dict(self) -> dict:
        v = complex(self.value)
        return {
            "name": self.name,
            "value": [v.real, v.imag],
            "magnitude": self.magnitude,
            "bound": f"{self.bound.numerator}/{self.bound.denominator}",
            "attained": self.attained,
        }


def _exact_abs2(x):
    if isinstance(x, QComplex):
        return x.abs2()
    return Fraction(x) * Fraction(x)


def hankel_log(v: CoefficientVector):
    """gamma1*gamma3 - gamma2^2, asserted against its quartic a-form."""
    out = v.gamma1 * v.gamma3 - v.gamma2 ** 2
    afrm = (v.a2 ** 4 - 12 * v.a3 ** 2 + 12 * v.a2 * v.a4)
    afrm = afrm * Fraction(1, 48) if _is_exact(afrm) else afrm / 48
    _assert_close(out, afrm, "hankel_log")
    return out


def hankel_log_from_c(c1, c2, c3):
    """The quartic Caratheodory-coefficient form of the determinant."""
    poly = 19 * c1 ** 4 - 56 * c1 ** 2 * c2 - 144 * c2 ** 2 + 192 * c1 * c3
    if _is_exact(poly):
        return poly * Fraction(1, 36864)
    return poly / 36864


def hankel_log_from_params(params):
    """The determinant in the tau coordinates (affine in tau3)."""
    t1, t2, t3 = params.tau1, params.tau2, params.tau3
    s = 1 - t1 * t1
    if isinstance(t2, QComplex):
        t2_abs2 = t2.abs2()
    elif isinstance(t2, (int, Fraction)):
        t2_abs2 = t2 * t2
    else:
        t2_abs2 = abs(t2) ** 2
    expr = (3 * t1 ** 4 - 4 * t1 ** 2 * t2 * s
            - 12 * t2 ** 2 * s * (3 + t1 * t1)
            + 48 * t1 * t3 * s * (1 - t2_abs2))
    if _is_exact(expr):
        return expr * Fraction(1, 2304)
    return expr / 2304


def fekete_szego(v: CoefficientVector, mu):
    """a3 - mu * a2^2."""
    a2, a3 = v.a2, v.a3
    if not _is_exact(mu) and _is_exact(a2):
        a2, a3 = complex(a2), complex(a3)
    return a3 - mu * a2 ** 2


def fekete_bound(mu) -> Fraction | float:
    """Sharp bound of |a3 - mu a2^2|: (1/12)|1-3mu| outside [-2/3, 4/3], else 1/4.

    The outer branches meet the middle one continuously at mu = -2/3 and 4/3.
    """
    if isinstance(mu, (int, Fraction)):
        mu = Fraction(mu)
        if -Fraction(2, 3) <= mu <= Fraction(4, 3):
            return Fraction(1, 4)
        return Fraction(1, 12) * abs(1 - 3 * mu)
    if -2 / 3 <= mu <= 4 / 3:
        return 0.25
    return abs(1 - 3 * mu) / 12


def zalcman(v: CoefficientVector):
    """a3^2 - a5."""
    return v.a3 ** 2 - v.a5


def zalcman_from_c(c1, c2, c3, c4):
    """Quartic c-form of a3^2 - a5 (the one bounded by 2/16 = 1/8)."""
    lam, a, b, beta = ZALCMAN_LAMBDA, ZALCMAN_A, ZALCMAN_B, ZALCMAN_BETA
    expr = (lam * c1 ** 4 + a * c2 ** 2 + 2 * b * c1 * c3
            - Fraction(3, 2) * beta * c1 ** 2 * c2 - c4)
    if _is_exact(expr):
        return expr * Fraction(1, 16)
    return expr / 16


def gen_zalcman(v: CoefficientVector):
    """a2*a3 - a4."""
    return v.a2 * v.a3 - v.a4


def gen_zalcman_from_c(c1, c2, c3):
    """Cubic c-form of a2 a3 - a4.

    The identity carries a global minus sign: a2 a3 - a4 equals
    -(1/12)(c3 - 2 B c1 c2 + D c1^3); magnitudes agree with the cited form.
    """
    B, D = GEN_ZALCMAN_B, GEN_ZALCMAN_D
    expr = c3 - 2 * B * c1 * c2 + D * c1 ** 3
    if _is_exact(expr):
        return -expr * Fraction(1, 12)
    return -expr / 12


def ma_minda_bound(v) -> float:
    """Sharp bound of |c2 - v c1^2| over the class: piecewise in v."""
    if v < 0:
        return -4 * v + 2
    if v <= 1:
        return 2 if isinstance(v, (int, Fraction)) else 2.0
    return 4 * v - 2


def zalcman_lemma_margin() -> Fraction:
    """Exact value of the quartic-form lemma's discriminant expression.

    Negative, so the |...| <= 2 bound applies with the constants above.
    """
    lam, a, b, beta = ZALCMAN_LAMBDA, ZALCMAN_A, ZALCMAN_B, ZALCMAN_BETA
    return (8 * a * (1 - a) * ((b * beta - 2 * lam) ** 2
                               + (b * (a + b) - beta) ** 2)
            + b * (1 - b) * (beta - 2 * a * b) ** 2
            - 4 * a * b ** 2 * (1 - a) * (1 - b) ** 2)


def gen_zalcman_lemma_bounds() -> tuple[Fraction, Fraction, Fraction]:
    """The chain B(2B-1) <= D <= B instantiated with the cubic-form constants."""
    B, D = GEN_ZALCMAN_B, GEN_ZALCMAN_D
    return (B * (2 * B - 1), D, B)
