"""Graded tensors of base and group forms.

A Tensor is a finite sum of pure tensors of basis forms. Each leg of a pure
tensor is a ``(degree, index)`` pair naming a basis element of the leg's
space; the spaces are fixed per tensor, e.g. ``(BASE, GROUP)`` for the total
space calculus or ``(BASE, GROUP, GROUP)`` for the image of its coaction.
Terms of total degree above 2 are dropped on construction.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from qpb.models.forms import BaseForm, GroupForm, MAX_DEGREE, PairForm
from qpb.models.scalar import ExactC

Leg = tuple[int, int]
Key = tuple[Leg, ...]


class Space(str, Enum):
    BASE = "M"
    GROUP = "G"


FORM_TYPES = {Space.BASE: BaseForm, Space.GROUP: GroupForm}


def space_of(form: PairForm) -> Space:
    return Space.BASE if isinstance(form, BaseForm) else Space.GROUP


def key_degree(key: Key) -> int:
    return sum(leg[0] for leg in key)


@dataclass(frozen=True, eq=False)
class Tensor:
    spaces: tuple[Space, ...]
    terms: dict[Key, ExactC] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, coef in self.terms.items():
            if len(key) != len(self.spaces):
                raise ValueError(f"term {key} does not match spaces {self.spaces}")
            if coef and key_degree(key) <= MAX_DEGREE:
                clean[key] = clean.get(key, ExactC(0)) + coef
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})
        object.__setattr__(self, "spaces", tuple(Space(s) for s in self.spaces))

    @classmethod
    def zero(cls, spaces: Iterable[Space]) -> "Tensor":
        return cls(tuple(spaces), {})

    @classmethod
    def pure(cls, *forms: PairForm) -> "Tensor":
        """Outer product ``f1 x f2 x ...`` of homogeneous forms."""
        spaces = tuple(space_of(f) for f in forms)
        terms: dict[Key, ExactC] = {(): ExactC(1)}
        for form in forms:
            terms = {
                key + ((form.degree, idx),): coef * c
                for key, coef in terms.items()
                for idx, c in enumerate(form.c)
                if c
            }
        return cls(spaces, terms)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.spaces == other.spaces and self.terms == other.terms

    __hash__ = None

    def _check(self, other: "Tensor"):
        if self.spaces != other.spaces:
            raise TypeError(f"tensor spaces differ: {self.spaces} vs {other.spaces}")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        terms = dict(self.terms)
        for key, coef in other.terms.items():
            terms[key] = terms.get(key, ExactC(0)) + coef
        return Tensor(self.spaces, terms)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def __neg__(self) -> "Tensor":
        return Tensor(self.spaces, {k: -v for k, v in self.terms.items()})

    def scale(self, z) -> "Tensor":
        z = ExactC.coerce(z)
        return Tensor(self.spaces, {k: z * v for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[tuple[Key, ExactC]]:
        return iter(self.terms.items())

    def degrees(self) -> set[int]:
        return {key_degree(k) for k in self.terms}

    def leg_form(self, key: Key, position: int) -> PairForm:
        degree, index = key[position]
        return FORM_TYPES[self.spaces[position]].basis(degree, index)

    def to_dict(self) -> dict:
        return {
            "spaces": [s.value for s in self.spaces],
            "terms": [
                {"legs": [list(leg) for leg in key], "coef": str(coef)}
                for key, coef in sorted(self.terms.items())
            ],
        }

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, coef in sorted(self.terms.items()):
            legs = " x ".join(f"{s.value}{d}.{i}" for s, (d, i) in zip(self.spaces, key))
            parts.append(f"({coef}) {legs}")
        return " + ".join(parts)
