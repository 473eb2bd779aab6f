from .verification import VerificationEngine, get_verification_engine
from .replication import ReplicationEngine, get_replication_engine
from .solver import SolverEngine, get_solver_engine

__all__ = [
    "VerificationEngine",
    "get_verification_engine",
    "ReplicationEngine",
    "get_replication_engine",
    "SolverEngine",
    "get_solver_engine",
]
