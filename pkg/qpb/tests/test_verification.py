import pytest

from qpb.errors import ParseError, QPBError
from qpb.fixtures import OMEGA_ONE_ZERO, OMEGA_YM
from qpb.models.reports import SUITES
from qpb.services.calibration import DEFAULT_CALIBRATION, use_calibration
from qpb.services.verification import (
    CONNECTION_SAMPLES,
    CURVATURE_SAMPLES,
    SUITE_CHECKS,
    _evaluate,
    bundle_checks,
    field_checks,
    _first_failure,
    get_verification_engine,
    variational_consistency,
    ymsm_variational_consistency,
)
from qpb.status import get_status_tracker


class TestHelpers:
    def test_first_failure(self):
        assert _first_failure([(1,), (2,)], lambda x: x > 0) == (True, "2 cases")
        passed, detail = _first_failure([(1,), (-2,)], lambda x: x > 0)
        assert not passed
        assert detail == "counterexample: -2"

    def test_errors_become_failures(self):
        def boom():
            raise ParseError("bad scalar")

        check = _evaluate("calculus", "boom", boom)
        assert not check.passed
        assert check.detail == "ParseError: bad scalar"

    def test_outcome_with_detail(self):
        check = _evaluate("calculus", "ok", lambda: (True, "3 cases"))
        assert check.passed
        assert check.detail == "3 cases"


class TestSuites:
    @pytest.mark.parametrize("suite", list(SUITE_CHECKS))
    def test_suite_passes(self, suite):
        report = get_verification_engine().run(suite)
        assert report.passed, report.first_failure
        assert report.first_failure is None
        assert all(c.suite == suite for c in report.checks)
        assert report.calibration == DEFAULT_CALIBRATION.to_dict()

    def test_sample_counts(self):
        assert (CURVATURE_SAMPLES, CONNECTION_SAMPLES) == (20, 10)
        bundle = dict(bundle_checks())
        assert bundle["three curvature paths agree"]() == (True, "20 cases")
        field = dict(field_checks())
        assert field["continuity identity"]() == (True, "12 cases")
        assert field["variational consistency"]() == (True, "10 cases")

    def test_laplacian_variant_is_reported(self):
        checks = dict(SUITE_CHECKS["qvb"]())
        assert checks["composite Laplacian differs from the component formulas at (1, 0)"]()
        assert checks["Laplacian formulas agree on real connections"]()[0]

    def test_suite_names(self):
        assert get_verification_engine().suites() == list(SUITES)
        assert set(SUITE_CHECKS) | {"all"} == set(SUITES)

    def test_unknown_suite(self):
        with pytest.raises(QPBError):
            get_verification_engine().run("topology")

    def test_status_returns_to_idle(self):
        get_verification_engine().run("hopf")
        assert get_status_tracker().get_status()["state"] == "idle"

    def test_flipped_phase_fails_calculus(self):
        with use_calibration(DEFAULT_CALIBRATION.flipped("phase")):
            report = get_verification_engine().run("calculus")
        assert not report.passed
        assert report.first_failure is not None
        assert report.calibration["product_phase"] == "-i"

    def test_flipped_hodge_fails_calculus(self):
        with use_calibration(DEFAULT_CALIBRATION.flipped("hodge")):
            report = get_verification_engine().run("calculus")
        assert not report.passed


class TestVariational:
    @pytest.mark.parametrize("omega", [OMEGA_ONE_ZERO, OMEGA_YM], ids=["(1,0)", "ym"])
    def test_yang_mills(self, omega):
        passed, detail = variational_consistency(omega)
        assert passed, detail

    def test_yang_mills_scalar(self):
        passed, detail = ymsm_variational_consistency(OMEGA_ONE_ZERO)
        assert passed, detail
