"""Potentials V: M -> M for the matter part of the Yang-Mills-scalar Lagrangian.

Functions on M are degree-0 base forms, and a potential acts entry by entry.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from qpb.errors import ParseError
from qpb.models.forms import BaseForm
from qpb.models.scalar import ExactC


class PotentialKind(str, Enum):
    POLYNOMIAL = "polynomial"
    PAPER_EXAMPLE = "paper_example"


@dataclass(frozen=True)
class Potential:
    """Either ``V(p) = sum_n c_n p^n`` or a potential tuned to the section diag(x, y).

    The ``paper_example`` kind has ``V'(p) = diag(2 - 2y/x, 2 - 2x/y)`` for
    fixed nonzero ``x, y`` and ``V(p) = V'(p) p``. ``shift`` adds a constant
    diagonal to V' (and ``shift * p`` to V); it perturbs a critical potential.
    """

    kind: PotentialKind
    coeffs: tuple[ExactC, ...] = ()
    x: Optional[ExactC] = None
    y: Optional[ExactC] = None
    shift: Optional[BaseForm] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", PotentialKind(self.kind))
        object.__setattr__(self, "coeffs", tuple(ExactC.coerce(c) for c in self.coeffs))
        if self.kind == PotentialKind.PAPER_EXAMPLE:
            if self.x is None or self.y is None:
                raise ValueError("paper_example potential needs x and y")
            object.__setattr__(self, "x", ExactC.coerce(self.x))
            object.__setattr__(self, "y", ExactC.coerce(self.y))
            if not self.x or not self.y:
                raise ValueError("paper_example potential needs x * y != 0")
        if self.shift is not None and self.shift.degree != 0:
            raise ValueError("potential shift must be a 0-form")

    @classmethod
    def polynomial(cls, *coeffs) -> "Potential":
        return cls(PotentialKind.POLYNOMIAL, tuple(coeffs))

    @classmethod
    def zero(cls) -> "Potential":
        return cls.polynomial()

    @classmethod
    def identity(cls) -> "Potential":
        """V(p) = p, so V' = 1."""
        return cls.polynomial(0, 1)

    @classmethod
    def paper_example(cls, x, y) -> "Potential":
        return cls(PotentialKind.PAPER_EXAMPLE, x=x, y=y)

    @classmethod
    def parse(cls, text: str) -> "Potential":
        """``zero``, ``identity``, ``poly:c0,c1,...`` or ``paper:x,y`` (``tuned:x,y`` is an alias)."""
        text = text.strip()
        if text == "zero":
            return cls.zero()
        if text == "identity":
            return cls.identity()
        kind, _, args = text.partition(":")
        values = [a for a in args.split(",") if a.strip()]
        try:
            if kind == "poly":
                return cls.polynomial(*(ExactC.parse(v) for v in values))
            if kind in ("paper", "tuned") and len(values) == 2:
                return cls.paper_example(ExactC.parse(values[0]), ExactC.parse(values[1]))
        except ValueError as exc:
            raise ParseError(f"invalid potential {text!r}: {exc}") from exc
        raise ParseError(f"invalid potential {text!r}; expected zero, identity, poly:c0,c1,... or paper:x,y")

    def with_shift(self, delta: BaseForm) -> "Potential":
        return Potential(self.kind, self.coeffs, self.x, self.y, delta)

    def _example_slope(self) -> BaseForm:
        two = ExactC(2)
        return BaseForm(0, (two - two * self.y / self.x, two - two * self.x / self.y))

    def _entry(self, z: ExactC, derivative: bool) -> ExactC:
        total = ExactC(0)
        power = ExactC(1)
        coeffs = self.coeffs
        if derivative:
            coeffs = tuple(c * n for n, c in enumerate(coeffs))[1:]
        for c in coeffs:
            total = total + c * power
            power = power * z
        return total

    def derivative(self, p: BaseForm) -> BaseForm:
        if self.kind == PotentialKind.PAPER_EXAMPLE:
            result = self._example_slope()
        else:
            result = p.map(lambda z: self._entry(z, True))
        if self.shift is not None:
            result = result + self.shift
        return result

    def value(self, p: BaseForm) -> BaseForm:
        if self.kind == PotentialKind.PAPER_EXAMPLE:
            slope = self._example_slope()
            result = BaseForm(0, (slope.c[0] * p.c[0], slope.c[1] * p.c[1]))
        else:
            result = p.map(lambda z: self._entry(z, False))
        if self.shift is not None:
            result = result + BaseForm(0, (self.shift.c[0] * p.c[0], self.shift.c[1] * p.c[1]))
        return result

    def to_dict(self) -> dict:
        data = {"kind": self.kind.value}
        if self.kind == PotentialKind.PAPER_EXAMPLE:
            data.update(x=str(self.x), y=str(self.y))
        else:
            data["coeffs"] = [str(c) for c in self.coeffs]
        if self.shift is not None:
            data["shift"] = [str(z) for z in self.shift.c]
        return data
