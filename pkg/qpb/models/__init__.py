from .scalar import ExactC, ApproxC
from .forms import BaseForm, GroupForm, MixedForm, Side
from .tensor import Space, Tensor
from .corep import Corep
from .connection import QPC
from .sections import Section, VForm, AdForm
from .gauge import GaugeMap
from .potential import Potential, PotentialKind
from .results import Residual, CriticalPoint, PointKind
from .reports import (
    LawCheck,
    VerificationReport,
    Claim,
    ReplicationReport,
    CandidateResult,
    CalibrationLedger,
    SolveRun,
    VerifyRequest,
    SolveYMRequest,
    SolveYMSMRequest,
    ReplicateRequest,
    RunConfig,
)

__all__ = [
    "ExactC",
    "ApproxC",
    "BaseForm",
    "GroupForm",
    "MixedForm",
    "Side",
    "Space",
    "Tensor",
    "Corep",
    "QPC",
    "Section",
    "VForm",
    "AdForm",
    "GaugeMap",
    "Potential",
    "PotentialKind",
    "Residual",
    "CriticalPoint",
    "PointKind",
    "LawCheck",
    "VerificationReport",
    "Claim",
    "ReplicationReport",
    "CandidateResult",
    "CalibrationLedger",
    "SolveRun",
    "VerifyRequest",
    "SolveYMRequest",
    "SolveYMSMRequest",
    "ReplicateRequest",
    "RunConfig",
]
