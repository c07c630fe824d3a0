"""Truncated power-series arithmetic over exact rationals or complex floats.

A :class:`TruncatedSeries` stores coefficients ``c0..cN`` together with the
truncation order ``N``.  Two scalar modes exist and never mix silently:

* ``"rational"`` -- coefficients are :class:`fractions.Fraction` or
  :class:`QComplex` (a complex number with exact rational parts).  Every
  operation is exact.
* ``"complex"`` -- coefficients are Python ``complex`` doubles.

All binary operations truncate at the minimum of the operand orders.
Composition requires the inner series to vanish at 0, which makes the
truncated result exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Union

__all__ = ["QComplex", "TruncatedSeries", "series_from_json"]


class QComplex:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x) -> "QComplex":
        if isinstance(x, QComplex):
            return x
        if isinstance(x, (int, Fraction)):
            return QComplex(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QComplex")

    def __add__(self, other):
        o = QComplex.coerce(other)
        return QComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = QComplex.coerce(other)
        return QComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return QComplex.coerce(other) - self

    def __mul__(self, other):
        o = QComplex.coerce(other)
        return QComplex(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = QComplex.coerce(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero QComplex")
        return QComplex((self.re * o.re + self.im * o.im) / d,
                        (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        return QComplex.coerce(other) / self

    def __neg__(self):
        return QComplex(-self.re, -self.im)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("QComplex powers must be nonnegative integers")
        out = QComplex(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "QComplex":
        return QComplex(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Exact squared modulus."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return abs(complex(self))

    def __eq__(self, other):
        try:
            o = QComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"QComplex({self.re!r}, {self.im!r})"


ExactScalar = Union[int, Fraction, QComplex]

RATIONAL = "rational"
COMPLEX = "complex"


def _coerce_exact(x):
    if isinstance(x, (Fraction, QComplex)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"{type(x).__name__} is not an exact scalar")


def _is_zero(x) -> bool:
    return x == 0


def _abs2(x):
    if isinstance(x, QComplex):
        return x.abs2()
    if isinstance(x, Fraction):
        return x * x
    return abs(x) ** 2


class TruncatedSeries:
    """Power series c0 + c1 z + ... + cN z^N, truncated at a known order."""

    __slots__ = ("coeffs", "mode")

    def __init__(self, coeffs: Iterable, mode: str | None = None):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant term")
        if mode is None:
            exact = all(isinstance(c, (int, Fraction, QComplex)) for c in coeffs)
            mode = RATIONAL if exact else COMPLEX
        if mode == RATIONAL:
            coeffs = [_coerce_exact(c) for c in coeffs]
        elif mode == COMPLEX:
            coeffs = [complex(c) for c in coeffs]
        else:
            raise ValueError(f"unknown mode {mode!r}")
        self.coeffs = tuple(coeffs)
        self.mode = mode

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int, mode: str = RATIONAL) -> "TruncatedSeries":
        return cls([0] * (order + 1), mode)

    @classmethod
    def one(cls, order: int, mode: str = RATIONAL) -> "TruncatedSeries":
        return cls([1] + [0] * order, mode)

    @classmethod
    def identity(cls, order: int, mode: str = RATIONAL) -> "TruncatedSeries":
        """The series z."""
        if order < 1:
            raise ValueError("identity needs order >= 1")
        return cls([0, 1] + [0] * (order - 1), mode)

    # -- basics ------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def constant(self):
        return self.coeffs[0]

    def _zero_scalar(self):
        return Fraction(0) if self.mode == RATIONAL else 0j

    def _check_mode(self, other: "TruncatedSeries"):
        if self.mode != other.mode:
            raise ValueError(
                f"mode mismatch: {self.mode} vs {other.mode}")

    def truncate(self, order: int) -> "TruncatedSeries":
        if order < 0:
            raise ValueError("order must be >= 0")
        if order <= self.order:
            return TruncatedSeries(self.coeffs[: order + 1], self.mode)
        pad = [self._zero_scalar()] * (order - self.order)
        return TruncatedSeries(list(self.coeffs) + pad, self.mode)

    def to_float(self) -> "TruncatedSeries":
        if self.mode == COMPLEX:
            return self
        return TruncatedSeries([complex(c) for c in self.coeffs], COMPLEX)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_mode(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], self.mode)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_mode(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[k] - other.coeffs[k] for k in range(n + 1)], self.mode)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.mode)

    def scale(self, s) -> "TruncatedSeries":
        """Multiply every coefficient by the scalar s."""
        return TruncatedSeries([c * s for c in self.coeffs], self.mode)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_mode(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            s = self._zero_scalar()
            for j in range(k + 1):
                s = s + a[j] * b[k - j]
            out.append(s)
        return TruncatedSeries(out, self.mode)

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_mode(other)
        if _is_zero(other.coeffs[0]):
            raise ValueError("division by a series with zero constant term")
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        q: list = []
        for k in range(n + 1):
            s = a[k]
            for j in range(k):
                s = s - q[j] * b[k - j]
            q.append(s / b[0])
        return TruncatedSeries(q, self.mode)

    def __eq__(self, other):
        """Coefficient-wise equality through the common order."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.mode != other.mode:
            return False
        n = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    # -- calculus ----------------------------------------------------------

    def differentiate(self) -> "TruncatedSeries":
        """Term-wise derivative; order drops by one."""
        if self.order == 0:
            return TruncatedSeries([self._zero_scalar()], self.mode)
        return TruncatedSeries(
            [k * self.coeffs[k] for k in range(1, self.order + 1)], self.mode)

    def integrate(self) -> "TruncatedSeries":
        """Term-wise antiderivative with zero constant term; order grows by one."""
        out = [self._zero_scalar()]
        for k, c in enumerate(self.coeffs):
            if self.mode == RATIONAL:
                out.append(c * Fraction(1, k + 1))
            else:
                out.append(c / (k + 1))
        return TruncatedSeries(out, self.mode)

    def shift_down(self) -> "TruncatedSeries":
        """Divide by z; requires zero constant term."""
        if not _is_zero(self.coeffs[0]):
            raise ValueError("shift_down needs zero constant term")
        if self.order == 0:
            return TruncatedSeries([self._zero_scalar()], self.mode)
        return TruncatedSeries(self.coeffs[1:], self.mode)

    def shift_up(self) -> "TruncatedSeries":
        """Multiply by z; order grows by one."""
        return TruncatedSeries([self._zero_scalar(), *self.coeffs], self.mode)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``inner`` (which must vanish at 0) into this series."""
        self._check_mode(inner)
        if not _is_zero(inner.coeffs[0]):
            raise ValueError("compose needs inner series with zero constant term")
        n = min(self.order, inner.order)
        inner_t = inner.truncate(n)
        out = TruncatedSeries([self.coeffs[n]] + [self._zero_scalar()] * n,
                              self.mode)
        for k in range(n - 1, -1, -1):
            out = out * inner_t
            out = TruncatedSeries(
                [out.coeffs[0] + self.coeffs[k], *out.coeffs[1:]], self.mode)
        return out

    def log(self) -> "TruncatedSeries":
        """Logarithm of a series with constant term 1 (log 1 := 0)."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        # d/dz log a = a'/a, integrated back; exact through the same order.
        quot = self.differentiate() / self.truncate(max(self.order - 1, 0))
        return quot.integrate().truncate(self.order)

    def exp(self) -> "TruncatedSeries":
        """Exponential of a series with constant term 0."""
        if not _is_zero(self.coeffs[0]):
            raise ValueError("exp needs constant term 0")
        n = self.order
        a = self.coeffs
        e: list = [Fraction(1) if self.mode == RATIONAL else 1 + 0j]
        for k in range(1, n + 1):
            s = self._zero_scalar()
            for j in range(1, k + 1):
                s = s + j * a[j] * e[k - j]
            if self.mode == RATIONAL:
                e.append(s * Fraction(1, k))
            else:
                e.append(s / k)
        return TruncatedSeries(e, self.mode)

    # -- evaluation & serialization ---------------------------------------

    def evaluate(self, z, radius: float = 0.99) -> complex:
        """Horner evaluation of the truncated polynomial at a complex point.

        Truncation error is the caller's concern; the reliability radius
        guards against evaluating where the tail plainly dominates.
        """
        z = complex(z)
        if abs(z) >= radius:
            raise ValueError(f"|z|={abs(z):.6g} outside reliability radius {radius}")
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def to_json(self) -> str:
        if self.mode == RATIONAL:
            coeffs = []
            for c in self.coeffs:
                if isinstance(c, QComplex):
                    if c.im == 0:
                        coeffs.append(_frac_str(c.re))
                    else:
                        coeffs.append([_frac_str(c.re), _frac_str(c.im)])
                else:
                    coeffs.append(_frac_str(c))
        else:
            coeffs = [[c.real, c.imag] for c in self.coeffs]
        return json.dumps({"order": self.order, "mode": self.mode,
                           "coeffs": coeffs}, sort_keys=True)

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, mode={self.mode!r})"


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def series_from_json(text: str) -> TruncatedSeries:
    data = json.loads(text)
    mode = data["mode"]
    if mode == RATIONAL:
        coeffs = []
        for c in data["coeffs"]:
            if isinstance(c, list):
                coeffs.append(QComplex(Fraction(c[0]), Fraction(c[1])))
            else:
                coeffs.append(Fraction(c))
    else:
        coeffs = [complex(c[0], c[1]) for c in data["coeffs"]]
    s = TruncatedSeries(coeffs, mode)
    if s.order != data["order"]:
        raise ValueError("order field disagrees with coefficient count")
    return s
