from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from qpb.models.connection import QPC
from qpb.models.scalar import ExactC
from qpb.models.sections import Section


@dataclass(frozen=True)
class Residual:
    """Named vector of exact components; zero iff the equation holds."""

    name: str
    components: tuple[tuple[str, ExactC], ...]

    @classmethod
    def of(cls, name: str, pairs: Iterable[tuple[str, ExactC]]) -> "Residual":
        return cls(name, tuple((label, ExactC.coerce(value)) for label, value in pairs))

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self.components]

    @property
    def values(self) -> list[ExactC]:
        return [value for _, value in self.components]

    def __getitem__(self, label: str) -> ExactC:
        for name, value in self.components:
            if name == label:
                return value
        raise KeyError(label)

    def is_zero(self) -> bool:
        return not any(self.values)

    def real_part(self) -> "Residual":
        return Residual(f"{self.name}.real", tuple((label, ExactC(v.re)) for label, v in self.components))

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "components": [{"name": label, "value": str(value)} for label, value in self.components],
            "is_zero": self.is_zero(),
        }


class PointKind(str, Enum):
    FLAT = "flat"
    YM_NONFLAT = "ym_nonflat"
    MATTER = "matter"


@dataclass(frozen=True)
class CriticalPoint:
    """A solver result with its exact certificate.

    ``exactified`` is False when the snapped point failed its exact
    certificate (or could not be snapped); ``approx`` then holds the float
    values the iteration converged to.
    """

    omega: QPC
    kind: PointKind
    certificate: tuple[Residual, ...]
    exactified: bool
    sections: Optional[tuple[Section, Section]] = None
    approx: tuple[complex, ...] = ()
    iterations: int = 0
    residual_norm: float = 0.0
    snap_distance: float = 0.0

    def sort_key(self) -> tuple:
        return (self.kind.value, float(self.omega.lambda0.re), float(self.omega.lambda0.im),
                float(self.omega.lambda1.re), float(self.omega.lambda1.im))

    def to_dict(self) -> dict:
        data = {
            "omega": self.omega.to_dict(),
            "kind": self.kind.value,
            "certificate": [r.to_dict() for r in self.certificate],
            "exactified": self.exactified,
            "approx": [[z.real, z.imag] for z in self.approx],
            "iterations": self.iterations,
            "residual_norm": self.residual_norm,
            "snap_distance": self.snap_distance,
        }
        if self.sections is not None:
            data["sections"] = [t.to_dict() for t in self.sections]
        return data
