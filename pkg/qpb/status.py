"""Status of the engine currently running, as shown at ``GET /status``.

Engines wrap their work in ``track``: the tracker shows the running state
while the block executes, returns to idle afterwards, and keeps the error
state (with the exception text) when the block raises.
"""

import logging
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

logger = logging.getLogger(__name__)


class StatusState(str, Enum):
    IDLE = "idle"
    VERIFYING = "verifying"
    SOLVING = "solving"
    REPLICATING = "replicating"
    ERROR = "error"


@dataclass(frozen=True)
class Status:
    state: StatusState
    message: Optional[str] = None


class StatusTracker:
    """Singleton tracker for engine status."""

    def __init__(self):
        self._status = Status(StatusState.IDLE)

    @property
    def state(self) -> StatusState:
        return self._status.state

    def set_status(self, state: str, message: Optional[str] = None):
        self._status = Status(StatusState(state), message)
        logger.debug("status %s: %s", self._status.state.value, message)

    @contextmanager
    def track(self, state: str, message: Optional[str] = None) -> Iterator[None]:
        self.set_status(state, message)
        try:
            yield
        except Exception as exc:
            self.set_status(StatusState.ERROR, f"{state} failed: {type(exc).__name__}: {exc}")
            raise
        self.set_status(StatusState.IDLE)

    def get_status(self) -> dict:
        return {"state": self._status.state.value, "message": self._status.message}

    def clear(self):
        self._status = Status(StatusState.IDLE)


_status_tracker: Optional[StatusTracker] = None


def get_status_tracker() -> StatusTracker:
    """Get the singleton StatusTracker instance."""
    global _status_tracker
    if _status_tracker is None:
        _status_tracker = StatusTracker()
    return _status_tracker
