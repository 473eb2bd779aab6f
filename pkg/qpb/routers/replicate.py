from fastapi import APIRouter, Depends

from qpb.models import ReplicateRequest, ReplicationReport
from qpb.services import ReplicationEngine, get_replication_engine

router = APIRouter(prefix="/replicate", tags=["replicate"])


@router.post("", response_model=ReplicationReport)
async def replicate(
    request: ReplicateRequest,
    engine: ReplicationEngine = Depends(get_replication_engine),
):
    """Evaluate the claim ledger, optionally with one convention flipped."""
    return engine.run(request.flip_calibration)
