"""Two-component forms on the base space and on the structure group.

Both calculi store exactly two complex numbers per degree:

* base forms, matrix picture: ``[z0,z1]_0`` diagonal, ``[w01,w10]_1`` off
  diagonal, ``[v0,v1]_2`` diagonal;
* group forms, path picture: ``(g0,g1)_0``, ``(t01,t10)_1``, ``(t010,t101)_2``.

The algebra lives in ``qpb.services.base_calculus`` and
``qpb.services.group_hopf``; these classes only carry data and the vector
space structure.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Union

from qpb.errors import DegreeMismatchError
from qpb.models.scalar import ExactC, ONE, ZERO

MAX_DEGREE = 2

Scalar = Union[ExactC, int, str]


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True, slots=True)
class PairForm:
    degree: int
    c: tuple[ExactC, ExactC]

    def __post_init__(self):
        if len(self.c) != 2:
            raise ValueError("a form has exactly two components")
        object.__setattr__(self, "c", (ExactC.coerce(self.c[0]), ExactC.coerce(self.c[1])))
        # degrees outside 0..2 only occur as the truncated zero
        if self.degree not in range(MAX_DEGREE + 1) and not self.is_zero():
            raise DegreeMismatchError(f"nonzero form of degree {self.degree} outside 0..{MAX_DEGREE}")

    @classmethod
    def of(cls, degree: int, c0: Scalar, c1: Scalar):
        return cls(degree, (ExactC.coerce(c0), ExactC.coerce(c1)))

    @classmethod
    def zero(cls, degree: int):
        return cls(degree, (ZERO, ZERO))

    @classmethod
    def basis(cls, degree: int, index: int):
        return cls(degree, (ONE, ZERO) if index == 0 else (ZERO, ONE))

    @classmethod
    def basis_elements(cls, degree: int) -> list:
        return [cls.basis(degree, 0), cls.basis(degree, 1)]

    def _check(self, other: "PairForm"):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.degree != self.degree:
            raise DegreeMismatchError(f"degree {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._check(other)
        return type(self)(self.degree, (self.c[0] + other.c[0], self.c[1] + other.c[1]))

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.degree, (self.c[0] - other.c[0], self.c[1] - other.c[1]))

    def __neg__(self):
        return type(self)(self.degree, (-self.c[0], -self.c[1]))

    def scale(self, z: Scalar):
        z = ExactC.coerce(z)
        return type(self)(self.degree, (z * self.c[0], z * self.c[1]))

    def map(self, fn):
        return type(self)(self.degree, (fn(self.c[0]), fn(self.c[1])))

    def is_zero(self) -> bool:
        return not (self.c[0] or self.c[1])

    def __iter__(self) -> Iterator[ExactC]:
        return iter(self.c)

    def to_dict(self) -> dict:
        return {"degree": self.degree, "c": [str(self.c[0]), str(self.c[1])]}

    @classmethod
    def from_dict(cls, data: dict):
        return cls.of(int(data["degree"]), *data["c"])

    def __str__(self):
        return f"[{self.c[0]}, {self.c[1]}]_{self.degree}"


class BaseForm(PairForm):
    """Element of Omega^k(M) for the two-point space M."""

    __slots__ = ()

    @classmethod
    def unit(cls) -> "BaseForm":
        return cls(0, (ONE, ONE))


class GroupForm(PairForm):
    """Element of the universal calculus on C(S2), degree <= 2.

    Degree-0 group forms are the group algebra elements themselves, with
    ``(g0, g1)`` the coefficients of the basis ``Delta_0, Delta_1``.
    """

    __slots__ = ()

    @classmethod
    def unit(cls) -> "GroupForm":
        return cls(0, (ONE, ONE))

    @classmethod
    def delta(cls, b: int) -> "GroupForm":
        return cls.basis(0, b)

    @classmethod
    def alternating(cls) -> "GroupForm":
        """The group-like element Delta_0 - Delta_1."""
        return cls(0, (ONE, -ONE))

    @classmethod
    def sigma(cls) -> "GroupForm":
        """The basis element (Delta_0 - Delta_1) dDelta_1 of the invariant 1-forms."""
        return cls(1, (ONE, ONE))

    def __str__(self):
        return f"({self.c[0]}, {self.c[1]})_{self.degree}"


@dataclass(frozen=True)
class MixedForm:
    """Inhomogeneous base form: one BaseForm per degree 0..2."""

    parts: tuple[BaseForm, BaseForm, BaseForm]

    @classmethod
    def of(cls, *forms: BaseForm) -> "MixedForm":
        parts = [BaseForm.zero(k) for k in range(MAX_DEGREE + 1)]
        for form in forms:
            parts[form.degree] = parts[form.degree] + form
        return cls(tuple(parts))

    def __getitem__(self, degree: int) -> BaseForm:
        return self.parts[degree]

    def __add__(self, other: "MixedForm") -> "MixedForm":
        return MixedForm(tuple(a + b for a, b in zip(self.parts, other.parts)))

    def grade_involution(self) -> "MixedForm":
        """Negate the odd-degree part."""
        return MixedForm(tuple(p if p.degree % 2 == 0 else -p for p in self.parts))

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)
