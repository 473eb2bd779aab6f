from dataclasses import dataclass

from qpb.models.corep import Corep
from qpb.models.forms import BaseForm, Side


@dataclass(frozen=True)
class Section:
    """Element ``T = p . T_basis`` of Mor(alpha, Phi) for a 1-dimensional corep.

    ``T_basis(1) = 1 x v_11`` is central, so ``p`` may be read on either side.
    """

    corep: Corep
    p: BaseForm

    def __post_init__(self):
        if self.p.degree != 0:
            raise ValueError(f"section coefficient must be a 0-form, got degree {self.p.degree}")

    @classmethod
    def of(cls, corep: Corep, p0, p1) -> "Section":
        return cls(corep, BaseForm.of(0, p0, p1))

    def with_p(self, p: BaseForm) -> "Section":
        return Section(self.corep, p)

    def to_dict(self) -> dict:
        return {"corep": self.corep.name, "p": [str(z) for z in self.p.c]}


@dataclass(frozen=True)
class VForm:
    """qvb-valued k-form, stored as its base-form component against T_basis."""

    corep: Corep
    comp: BaseForm
    side: Side = Side.LEFT

    @property
    def degree(self) -> int:
        return self.comp.degree

    def to_dict(self) -> dict:
        return {"corep": self.corep.name, "side": self.side.value, **self.comp.to_dict()}


@dataclass(frozen=True)
class AdForm:
    """Ad-equivariant horizontal form ``tau(sigma) = comp x 1``."""

    comp: BaseForm

    @property
    def degree(self) -> int:
        return self.comp.degree

    def to_dict(self) -> dict:
        return self.comp.to_dict()
