"""Gauge maps: grade-preserving linear maps from the group calculus into Omega(M x G).

A gauge map is stored by its images of the six basis forms of the group
calculus (two per degree). Images are Tensors over ``(BASE, GROUP)`` of the
same total degree as the basis form.
"""

from dataclasses import dataclass, field
from itertools import product

from qpb.errors import DegreeMismatchError
from qpb.models.forms import MAX_DEGREE
from qpb.models.scalar import ExactC
from qpb.models.tensor import Key, Leg, Space, Tensor

TOTAL_SPACES = (Space.BASE, Space.GROUP)
GROUP_LEGS: tuple[Leg, ...] = tuple((k, x) for k in range(MAX_DEGREE + 1) for x in (0, 1))


def total_basis(degree: int) -> list[Key]:
    """Basis keys of the degree-``degree`` part of Omega(M x G): 4, 8 and 12 elements."""
    keys = []
    for base_degree in range(degree + 1):
        group_degree = degree - base_degree
        for i, j in product((0, 1), (0, 1)):
            keys.append(((base_degree, i), (group_degree, j)))
    return keys


@dataclass(frozen=True, eq=False)
class GaugeMap:
    images: dict[Leg, Tensor] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        full = {}
        for leg in GROUP_LEGS:
            image = self.images.get(leg, Tensor.zero(TOTAL_SPACES))
            if image.spaces != TOTAL_SPACES:
                raise ValueError(f"image of {leg} must live in Omega(M x G), got spaces {image.spaces}")
            if image.degrees() - {leg[0]}:
                raise DegreeMismatchError(f"image of {leg} is not of degree {leg[0]}: {image}")
            full[leg] = image
        unknown = set(self.images) - set(GROUP_LEGS)
        if unknown:
            raise ValueError(f"unknown basis forms {sorted(unknown)}")
        object.__setattr__(self, "images", full)

    def image(self, leg: Leg) -> Tensor:
        return self.images[leg]

    def __eq__(self, other):
        if not isinstance(other, GaugeMap):
            return NotImplemented
        return all(self.images[leg] == other.images[leg] for leg in GROUP_LEGS)

    __hash__ = None

    def named(self, name: str) -> "GaugeMap":
        return GaugeMap(self.images, name)

    def coefficient_matrix(self, degree: int) -> list[list[ExactC]]:
        """Rows: the two basis forms of ``degree``; columns: ``total_basis(degree)``."""
        keys = total_basis(degree)
        return [
            [self.images[(degree, x)].terms.get(key, ExactC(0)) for key in keys]
            for x in (0, 1)
        ]

    @classmethod
    def from_matrices(cls, matrices: list[list[list]], name: str = "") -> "GaugeMap":
        if len(matrices) != MAX_DEGREE + 1:
            raise ValueError(f"expected {MAX_DEGREE + 1} coefficient matrices, got {len(matrices)}")
        images = {}
        for degree, rows in enumerate(matrices):
            keys = total_basis(degree)
            for x, row in enumerate(rows):
                if len(row) != len(keys):
                    raise ValueError(f"degree {degree} row needs {len(keys)} coefficients, got {len(row)}")
                terms = {key: ExactC.coerce(c) for key, c in zip(keys, row)}
                images[(degree, x)] = Tensor(TOTAL_SPACES, terms)
        return cls(images, name)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "matrices": [
                [[str(c) for c in row] for row in self.coefficient_matrix(degree)]
                for degree in range(MAX_DEGREE + 1)
            ],
        }
