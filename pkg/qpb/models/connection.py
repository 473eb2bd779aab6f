from dataclasses import dataclass
from fractions import Fraction

from qpb.models.forms import BaseForm
from qpb.models.scalar import ExactC


@dataclass(frozen=True)
class QPC:
    """Quantum principal connection ``omega(sigma) = mu x 1 + 1 x sigma``.

    ``mu = [lambda0, lambda1]_1`` determines the connection completely.
    """

    lambda0: ExactC
    lambda1: ExactC

    def __post_init__(self):
        object.__setattr__(self, "lambda0", ExactC.coerce(self.lambda0))
        object.__setattr__(self, "lambda1", ExactC.coerce(self.lambda1))

    @classmethod
    def trivial(cls) -> "QPC":
        return cls(ExactC(0), ExactC(0))

    @classmethod
    def yang_mills(cls) -> "QPC":
        """The non-flat critical connection (i/2, i/2)."""
        half_i = ExactC(0, Fraction(1, 2))
        return cls(half_i, half_i)

    @classmethod
    def from_mu(cls, mu: BaseForm) -> "QPC":
        if mu.degree != 1:
            raise ValueError(f"mu must be a 1-form, got degree {mu.degree}")
        return cls(mu.c[0], mu.c[1])

    @property
    def mu(self) -> BaseForm:
        return BaseForm(1, (self.lambda0, self.lambda1))

    def hat(self) -> "QPC":
        """The *-conjugated connection, ``mu_hat = -mu*``."""
        return QPC(-self.lambda1.conj(), -self.lambda0.conj())

    @property
    def is_real(self) -> bool:
        """``mu* = -mu``, i.e. the connection equals its hat."""
        return self.hat() == self

    def to_dict(self) -> dict:
        return {"lambda0": str(self.lambda0), "lambda1": str(self.lambda1)}

    @classmethod
    def from_dict(cls, data: dict) -> "QPC":
        return cls(ExactC.coerce(data["lambda0"]), ExactC.coerce(data["lambda1"]))

    def __str__(self):
        return f"({self.lambda0}, {self.lambda1})"
