import pytest

from qpb.errors import ConvergenceError
from qpb.status import StatusState, StatusTracker, get_status_tracker


class TestStatusTracker:
    def test_starts_idle(self):
        assert StatusTracker().get_status() == {"state": "idle", "message": None}

    def test_set_status(self):
        tracker = StatusTracker()
        tracker.set_status("solving", "ten seeds")
        assert tracker.state == StatusState.SOLVING
        assert tracker.get_status()["message"] == "ten seeds"

    def test_unknown_state_rejected(self):
        with pytest.raises(ValueError):
            StatusTracker().set_status("loading")

    def test_track_shows_state_then_idle(self):
        tracker = StatusTracker()
        with tracker.track("verifying", "suite all"):
            assert tracker.get_status() == {"state": "verifying", "message": "suite all"}
        assert tracker.state == StatusState.IDLE

    def test_track_keeps_error(self):
        tracker = StatusTracker()
        with pytest.raises(ConvergenceError):
            with tracker.track("solving"):
                raise ConvergenceError("no descent", trace=[])
        status = tracker.get_status()
        assert status["state"] == "error"
        assert status["message"].startswith("solving failed: ConvergenceError")

    def test_clear(self):
        tracker = StatusTracker()
        tracker.set_status("error", "boom")
        tracker.clear()
        assert tracker.state == StatusState.IDLE

    def test_singleton(self):
        assert get_status_tracker() is get_status_tracker()
