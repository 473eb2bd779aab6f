from fastapi import APIRouter, Depends

from qpb.models import CalibrationLedger, CandidateResult
from qpb.services import VerificationEngine, get_verification_engine
from qpb.services.calibration import current_calibration

router = APIRouter(prefix="/calibration", tags=["calibration"])


@router.get("")
async def get_calibration():
    """The active convention constants."""
    return current_calibration().to_dict()


@router.get("/candidates", response_model=list[CandidateResult])
async def list_candidates(engine: VerificationEngine = Depends(get_verification_engine)):
    """Pass/fail of every convention combination."""
    return engine.calibration_ledger().candidates


@router.get("/ledger", response_model=CalibrationLedger)
async def get_ledger(engine: VerificationEngine = Depends(get_verification_engine)):
    """The full calibration ledger."""
    return engine.calibration_ledger()
