from fastapi import APIRouter, Depends, HTTPException

from qpb.errors import QPBError
from qpb.models import VerificationReport, VerifyRequest
from qpb.models.reports import SUITES
from qpb.services import VerificationEngine, get_verification_engine

router = APIRouter(prefix="/verify", tags=["verify"])


@router.get("/suites", response_model=list[str])
async def list_suites():
    """List the law suites."""
    return list(SUITES)


@router.post("", response_model=VerificationReport)
async def run_suite(
    request: VerifyRequest,
    engine: VerificationEngine = Depends(get_verification_engine),
):
    """Run a law suite under the active calibration."""
    try:
        return engine.run(request.suite)
    except QPBError as e:
        raise HTTPException(status_code=422, detail=str(e))
