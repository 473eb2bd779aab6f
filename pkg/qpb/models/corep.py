from dataclasses import dataclass

from qpb.models.forms import GroupForm


@dataclass(frozen=True)
class Corep:
    """Finite-dimensional corepresentation given by its matrix ``v_jk`` of group elements."""

    name: str
    matrix: tuple[tuple[GroupForm, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def is_one_dimensional(self) -> bool:
        return self.dim == 1

    @property
    def element(self) -> GroupForm:
        """The single entry ``v_11`` of a 1-dimensional corepresentation."""
        return self.matrix[0][0]

    def to_dict(self) -> dict:
        return {"name": self.name, "matrix": [[str(v) for v in row] for row in self.matrix]}
