import logging

from fastapi import FastAPI

from qpb import __version__
from qpb.config import get_settings
from qpb.routers import calibration_router, replicate_router, solve_router, verify_router
from qpb.status import get_status_tracker

logging.basicConfig(
    level=get_settings().log_level,
    format="%(asctime)s %(name)s %(levelname)s %(message)s",
)

app = FastAPI(
    title="qpb",
    description="Exact calculus, gauge theory and field equations on the two-point-space quantum principal bundle",
    version=__version__,
)

# Include routers
app.include_router(verify_router)
app.include_router(solve_router)
app.include_router(replicate_router)
app.include_router(calibration_router)


@app.get("/")
async def root():
    """Root endpoint."""
    return {
        "name": "qpb",
        "version": __version__,
        "status": "running",
    }


@app.get("/health")
async def health():
    """Health check endpoint."""
    return {"status": "healthy"}


@app.get("/status")
async def status():
    """Current verification, solver or replication status."""
    return get_status_tracker().get_status()
