from datetime import datetime, timezone
from typing import Literal, Optional, Union
from uuid import UUID, uuid4

from pydantic import BaseModel, Field, field_validator

from qpb.config import SolverOptions
from qpb.errors import ParseError
from qpb.models.scalar import ExactC

# "p/q" strings, {"re": "p/q", "im": "p/q"} or [re, im] floats
ScalarIn = Union[str, float, list[float], dict[str, str]]

SUITES = ("calculus", "hopf", "bundle", "qvb", "gauge", "field", "all")
Suite = Literal["calculus", "hopf", "bundle", "qvb", "gauge", "field", "all"]


def parse_exact(value: ScalarIn) -> ExactC:
    """Exact reading of a JSON scalar; float inputs are rejected."""
    if isinstance(value, str):
        return ExactC.parse(value)
    if isinstance(value, dict):
        return ExactC(ExactC.parse(value.get("re", "0")).re, ExactC.parse(value.get("im", "0")).re)
    raise ParseError(f"expected an exact scalar string, got {value!r}")


def parse_complex(value: ScalarIn) -> complex:
    if isinstance(value, (str, dict)):
        return complex(parse_exact(value))
    if isinstance(value, (int, float)):
        return complex(value)
    if len(value) != 2:
        raise ParseError(f"float scalars are [re, im] pairs, got {value!r}")
    return complex(value[0], value[1])


def _check_scalars(values: Optional[list], count: int, field: str) -> Optional[list]:
    if values is None:
        return None
    if len(values) != count:
        raise ValueError(f"{field} needs {count} scalars, got {len(values)}")
    for v in values:
        parse_complex(v)
    return values


class LawCheck(BaseModel):
    """Outcome of one law evaluated by a verification suite."""
    suite: str
    name: str
    passed: bool
    detail: Optional[str] = None


class VerificationReport(BaseModel):
    suite: str
    passed: bool
    calibration: dict
    checks: list[LawCheck]

    @property
    def first_failure(self) -> Optional[LawCheck]:
        return next((c for c in self.checks if not c.passed), None)


class Claim(BaseModel):
    """A displayed value next to the value this library computes."""
    name: str
    expected: str
    computed: str
    passed: bool


class ReplicationReport(BaseModel):
    passed: bool
    calibration: dict
    flip: Optional[str] = None
    claims: list[Claim]


class CandidateResult(BaseModel):
    calibration: dict
    passed: bool
    failures: list[str] = Field(default_factory=list)


class CalibrationLedger(BaseModel):
    chosen: dict
    unique: bool
    conventions: list[dict]
    candidates: list[CandidateResult]


class SolveRun(BaseModel):
    """A stored batch of solver results."""
    id: UUID = Field(default_factory=uuid4)
    mode: Literal["ym", "ymsm"]
    created: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
    config: dict = Field(default_factory=dict)
    points: list[dict] = Field(default_factory=list)
    failures: list[dict] = Field(default_factory=list)


class VerifyRequest(BaseModel):
    """Request model for running a verification suite."""
    suite: Suite = "all"


class SolveYMRequest(BaseModel):
    """Request model for a Yang-Mills critical point batch."""
    seeds: int = Field(default=10, gt=0, le=1000)
    seed: int = Field(default=0, ge=0)
    workers: int = Field(default=1, gt=0)
    options: SolverOptions = Field(default_factory=SolverOptions)


class SolveYMSMRequest(BaseModel):
    """Request model for one Yang-Mills-scalar critical point search.

    ``omega`` is ``[lambda0, lambda1]``; ``sections`` is ``[p~0, p~1, p^0, p^1]``.
    """
    corep: Literal["trivial", "alternating"] = "trivial"
    potential: str = "paper:2,1"
    omega: Optional[list[ScalarIn]] = None
    sections: Optional[list[ScalarIn]] = None
    freeze_omega: bool = False
    freeze_sections: bool = False
    options: SolverOptions = Field(default_factory=SolverOptions)

    @field_validator("omega")
    @classmethod
    def _omega_pair(cls, v):
        return _check_scalars(v, 2, "omega")

    @field_validator("sections")
    @classmethod
    def _section_values(cls, v):
        return _check_scalars(v, 4, "sections")


class ReplicateRequest(BaseModel):
    flip_calibration: Optional[Literal["phase", "hodge", "connection"]] = None


class RunConfig(BaseModel):
    """JSON run configuration accepted by ``qpb --config``."""
    command: Literal["verify", "solve", "replicate", "print-calibration"]
    mode: Optional[Literal["ym", "ymsm"]] = None
    suite: Suite = "all"
    seeds: int = Field(default=100, gt=0)
    seed: int = Field(default=0, ge=0)
    workers: int = Field(default=1, gt=0)
    corep: Literal["trivial", "alternating"] = "trivial"
    potential: str = "paper:2,1"
    omega: Optional[list[ScalarIn]] = None
    sections: Optional[list[ScalarIn]] = None
    freeze_omega: bool = False
    freeze_sections: bool = False
    flip_calibration: Optional[Literal["phase", "hodge", "connection"]] = None
    options: SolverOptions = Field(default_factory=SolverOptions)
    format: Literal["json", "table"] = "table"
    out: Optional[str] = None

    @field_validator("omega")
    @classmethod
    def _omega_pair(cls, v):
        return _check_scalars(v, 2, "omega")

    @field_validator("sections")
    @classmethod
    def _section_values(cls, v):
        return _check_scalars(v, 4, "sections")
