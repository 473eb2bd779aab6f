import pytest

from qpb.models.forms import BaseForm
from qpb.models.scalar import I, ONE
from qpb.services import base_calculus
from qpb.services.calibration import (
    DEFAULT_CALIBRATION,
    Calibration,
    CalibrationFlip,
    calibrated_cache,
    calibration_candidates,
    current_calibration,
    use_calibration,
)
from qpb.services.verification import get_verification_engine


class TestCalibration:
    def test_default(self):
        assert DEFAULT_CALIBRATION == Calibration(I, 1, 1)
        assert current_calibration() == DEFAULT_CALIBRATION
        assert DEFAULT_CALIBRATION.to_dict() == {"product_phase": "i", "hodge_even_sign": 1, "connection_sign": 1}

    def test_flips(self):
        assert DEFAULT_CALIBRATION.flipped("phase").product_phase == -I
        assert DEFAULT_CALIBRATION.flipped(CalibrationFlip.HODGE).hodge_even_sign == -1
        assert DEFAULT_CALIBRATION.flipped("connection").connection_sign == -1

    def test_candidates(self):
        candidates = calibration_candidates()
        assert len(candidates) == 16
        assert len(set(candidates)) == 16
        assert DEFAULT_CALIBRATION in candidates

    def test_context_is_restored(self):
        a, b = BaseForm.basis(1, 0), BaseForm.basis(1, 1)
        with use_calibration(Calibration(ONE, 1, 1)) as active:
            assert current_calibration() is active
            assert base_calculus.mul(a, b) == BaseForm.of(2, 1, 0)
        assert current_calibration() == DEFAULT_CALIBRATION
        assert base_calculus.mul(a, b) == BaseForm.of(2, I, 0)

    def test_context_is_restored_after_errors(self):
        with pytest.raises(RuntimeError):
            with use_calibration(DEFAULT_CALIBRATION.flipped("hodge")):
                raise RuntimeError("boom")
        assert current_calibration() == DEFAULT_CALIBRATION



class TestCalibratedCache:
    def test_keyed_on_active_calibration(self):
        calls = []

        @calibrated_cache
        def phase_times(n):
            calls.append(n)
            return current_calibration().product_phase * n

        assert phase_times(2) == I * 2
        assert phase_times(2) == I * 2
        with use_calibration(DEFAULT_CALIBRATION.flipped("phase")):
            assert phase_times(2) == -I * 2
        assert calls == [2, 2]
        phase_times.cache_clear()
        assert phase_times(2) == I * 2
        assert calls == [2, 2, 2]

    def test_gram_follows_calibration(self):
        default = base_calculus.gram(2)
        with use_calibration(DEFAULT_CALIBRATION.flipped("phase")):
            base_calculus.gram(2)
        assert base_calculus.gram(2) is default


class TestCalibrationLedger:
    @pytest.mark.parametrize("flip", list(CalibrationFlip))
    def test_each_flip_is_rejected(self, flip):
        result = get_verification_engine().evaluate_candidate(DEFAULT_CALIBRATION.flipped(flip))
        assert not result.passed
        assert result.failures

    def test_default_passes(self):
        result = get_verification_engine().evaluate_candidate(DEFAULT_CALIBRATION)
        assert result.passed, result.failures

    def test_ledger_is_unique(self):
        """Only the default combination passes every pinned law."""
        ledger = get_verification_engine().calibration_ledger()
        assert ledger.unique
        assert ledger.chosen == DEFAULT_CALIBRATION.to_dict()
        assert [c["name"] for c in ledger.conventions] == ["product_phase", "hodge_even_sign", "connection_sign"]
        assert sum(c.passed for c in ledger.candidates) == 1

    def test_ledger_is_computed_once(self):
        engine = get_verification_engine()
        assert engine.calibration_ledger() is engine.calibration_ledger()
