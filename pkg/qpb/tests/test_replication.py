import pytest

from qpb.services.replication import CLAIMS, get_replication_engine


def _claim(report, name):
    return next(c for c in report.claims if c.name == name)


class TestReplication:
    def test_all_claims_pass(self):
        report = get_replication_engine().run()
        assert report.passed, [c.name for c in report.claims if not c.passed]
        assert report.flip is None
        assert len(report.claims) == len(CLAIMS)

    def test_claim_values(self):
        report = get_replication_engine().run()
        assert _claim(report, "volume form").computed == "[-i, i]_2"
        assert _claim(report, "integral of p0 dp1 dp0").computed == "1/2"
        assert _claim(report, "action at the non-flat critical point").computed == "-1/8"

    def test_claim_names_are_unique(self):
        names = [name for name, _, _ in CLAIMS]
        assert len(names) == len(set(names))

    def test_phase_flip_breaks_curvature(self):
        report = get_replication_engine().run("phase")
        assert not report.passed
        assert report.calibration["product_phase"] == "-i"
        assert not _claim(report, "curvature of the non-flat critical connection").passed

    def test_hodge_flip_breaks_codifferential(self):
        report = get_replication_engine().run("hodge")
        assert not _claim(report, "codifferential displays").passed

    def test_connection_flip_reports_errors(self):
        report = get_replication_engine().run("connection")
        claim = _claim(report, "Laplacians at (i/2, i/2)")
        assert not claim.passed
        assert claim.computed.startswith("NotHorizontalError")

    def test_unknown_flip(self):
        with pytest.raises(ValueError):
            get_replication_engine().run("gauge")
