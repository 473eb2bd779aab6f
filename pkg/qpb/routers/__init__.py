from .verify import router as verify_router
from .solve import router as solve_router
from .replicate import router as replicate_router
from .calibration import router as calibration_router

__all__ = [
    "verify_router",
    "solve_router",
    "replicate_router",
    "calibration_router",
]
