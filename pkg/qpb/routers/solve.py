from uuid import UUID

from fastapi import APIRouter, Depends, HTTPException

from qpb.errors import QPBError
from qpb.models import Potential, SolveRun, SolveYMRequest, SolveYMSMRequest
from qpb.models.reports import parse_complex
from qpb.services import SolverEngine, get_solver_engine

router = APIRouter(prefix="/solve", tags=["solve"])


@router.post("/ym", response_model=SolveRun)
async def solve_ym(
    request: SolveYMRequest,
    engine: SolverEngine = Depends(get_solver_engine),
):
    """Search for Yang-Mills critical connections from random seeds."""
    try:
        return engine.run_ym(request.seeds, request.seed, request.options, request.workers)
    except QPBError as e:
        raise HTTPException(status_code=422, detail=str(e))


@router.post("/ymsm", response_model=SolveRun)
async def solve_ymsm(
    request: SolveYMSMRequest,
    engine: SolverEngine = Depends(get_solver_engine),
):
    """Search for one Yang-Mills-scalar critical point."""
    try:
        potential = Potential.parse(request.potential)
        omega = [parse_complex(v) for v in request.omega] if request.omega else (0, 0)
        sections = [parse_complex(v) for v in request.sections] if request.sections else None
        return engine.run_ymsm(
            request.corep,
            potential,
            omega,
            sections,
            request.options,
            request.freeze_omega,
            request.freeze_sections,
        )
    except QPBError as e:
        raise HTTPException(status_code=422, detail=str(e))


@router.get("/runs", response_model=list[SolveRun])
async def list_runs(engine: SolverEngine = Depends(get_solver_engine)):
    """List stored solver runs."""
    return engine.list_runs()


@router.get("/runs/{run_id}", response_model=SolveRun)
async def get_run(run_id: UUID, engine: SolverEngine = Depends(get_solver_engine)):
    """Get a solver run by ID."""
    run = engine.get_run(run_id)
    if run is None:
        raise HTTPException(status_code=404, detail="Run not found")
    return run
