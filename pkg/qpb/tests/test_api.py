import pytest
from fastapi.testclient import TestClient

from qpb.fixtures import clear_all
from qpb.main import app


@pytest.fixture
def client():
    clear_all()
    yield TestClient(app)
    clear_all()


class TestRoot:
    def test_health(self, client):
        assert client.get("/health").json() == {"status": "healthy"}

    def test_root(self, client):
        assert client.get("/").json()["name"] == "qpb"

    def test_status(self, client):
        assert client.get("/status").json()["state"] == "idle"


class TestVerifyApi:
    def test_suites(self, client):
        assert "calculus" in client.get("/verify/suites").json()

    def test_run_suite(self, client):
        response = client.post("/verify", json={"suite": "hopf"})
        assert response.status_code == 200
        assert response.json()["passed"]

    def test_unknown_suite_is_rejected(self, client):
        assert client.post("/verify", json={"suite": "topology"}).status_code == 422


class TestSolveApi:
    def test_ymsm_run_is_stored(self, client):
        response = client.post("/solve/ymsm", json={"corep": "trivial", "potential": "paper:2,1"})
        assert response.status_code == 200
        run = response.json()
        assert run["points"][0]["exactified"]
        assert client.get(f"/solve/runs/{run['id']}").json()["id"] == run["id"]
        assert [r["id"] for r in client.get("/solve/runs").json()] == [run["id"]]

    def test_exact_omega_strings(self, client):
        body = {"corep": "trivial", "potential": "paper:3,2", "omega": ["1/2 i", "1/2 i"], "freeze_omega": True}
        run = client.post("/solve/ymsm", json=body).json()
        assert run["points"][0]["omega"] == {"lambda0": "1/2 i", "lambda1": "1/2 i"}

    def test_bad_potential(self, client):
        assert client.post("/solve/ymsm", json={"potential": "cubic"}).status_code == 422

    def test_missing_run(self, client):
        assert client.get("/solve/runs/00000000-0000-0000-0000-000000000000").status_code == 404


class TestCalibrationApi:
    def test_active_calibration(self, client):
        assert client.get("/calibration").json() == {"product_phase": "i", "hodge_even_sign": 1, "connection_sign": 1}

    def test_ledger(self, client):
        ledger = client.get("/calibration/ledger").json()
        assert ledger["unique"]


class TestReplicateApi:
    def test_flip(self, client):
        report = client.post("/replicate", json={"flip_calibration": "phase"}).json()
        assert not report["passed"]
        assert report["flip"] == "phase"
