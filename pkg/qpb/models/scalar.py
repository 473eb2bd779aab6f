"""Scalar types: exact Gaussian rationals and their float64 view.

ExactC is the number type behind every form coefficient. Values are kept in
lowest terms by Fraction, so two equal numbers are structurally equal and
hash alike. ApproxC is only used by the iterative solver.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from qpb.errors import ExactDivisionError, ParseError

Rational = Union[int, Fraction]


def _format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, slots=True, eq=False)
class ExactC:
    """A complex number with rational real and imaginary parts.

    Parameters
    ----------
    re : int | Fraction
        Real part.
    im : int | Fraction, optional
        Imaginary part, defaults to 0.
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value: Union["ExactC", Rational, str]) -> "ExactC":
        """Promote ints, Fractions and strings to ExactC."""
        if isinstance(value, ExactC):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot build an exact scalar from {type(value).__name__}")

    @classmethod
    def parse(cls, text: str) -> "ExactC":
        """Parse strings such as ``"1/2"``, ``"-1/3i"``, ``"1/2+3/4 i"``."""
        s = text.replace(" ", "").replace("j", "i")
        if not s:
            raise ParseError("empty scalar string")
        try:
            split = -1
            for pos in range(len(s) - 1, 0, -1):
                if s[pos] in "+-" and s[pos - 1] not in "eE":
                    split = pos
                    break
            if s.endswith("i"):
                if split > 0:
                    return cls(Fraction(s[:split]), cls._imag_coeff(s[split:-1]))
                return cls(0, cls._imag_coeff(s[:-1]))
            return cls(Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not an exact scalar: {text!r}") from exc

    @staticmethod
    def _imag_coeff(coeff: str) -> Fraction:
        if coeff in ("", "+"):
            return Fraction(1)
        if coeff == "-":
            return Fraction(-1)
        return Fraction(coeff)

    def conj(self) -> "ExactC":
        return ExactC(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, an exact rational."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        if isinstance(other, ExactC):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return ExactC(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactC(other)
        if not isinstance(other, ExactC):
            return NotImplemented
        return ExactC(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactC(other)
        if not isinstance(other, ExactC):
            return NotImplemented
        return ExactC(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactC(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactC(self.re * other, self.im * other)
        if not isinstance(other, ExactC):
            return NotImplemented
        return ExactC(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactC(other)
        if not isinstance(other, ExactC):
            return NotImplemented
        den = other.abs2()
        if den == 0:
            raise ExactDivisionError(f"division of {self} by zero")
        return ExactC(
            (self.re * other.re + self.im * other.im) / den,
            (self.im * other.re - self.re * other.im) / den,
        )

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactC(other) / self
        return NotImplemented

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ExactC({self})"

    def __str__(self):
        if self.im == 0:
            return _format_fraction(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{_format_fraction(self.im)} i"
        if self.re == 0:
            return imag
        sign = "" if imag.startswith("-") else "+"
        return f"{_format_fraction(self.re)}{sign}{imag}"


ZERO = ExactC(0)
ONE = ExactC(1)
I = ExactC(0, 1)
HALF = ExactC(Fraction(1, 2))


@dataclass(frozen=True, slots=True)
class ApproxC:
    """Float64 view of a complex scalar; always finite."""

    re: float
    im: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "re", float(self.re))
        object.__setattr__(self, "im", float(self.im))
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError(f"non-finite scalar ({self.re}, {self.im})")

    @classmethod
    def from_complex(cls, z: complex) -> "ApproxC":
        return cls(z.real, z.imag)

    def __complex__(self):
        return complex(self.re, self.im)

    def as_pair(self) -> list[float]:
        return [self.re, self.im]
