"""HTTP service surface."""

import json

import pytest
from fastapi.testclient import TestClient

from podles.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestEndpoints:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json() == {"status": "ok"}

    def test_eval(self, client):
        resp = client.post("/eval", json={"expression": "hodge(e+)"})
        assert resp.status_code == 200
        assert resp.json() == {"expression": "hodge(e+)", "value": "i*e+"}

    def test_eval_parse_error(self, client):
        resp = client.post("/eval", json={"expression": "q*("})
        assert resp.status_code == 422
        assert "column" in resp.json()["detail"]

    def test_verify(self, client):
        resp = client.post("/verify", json={"suite": "sl2", "max_level": 2})
        assert resp.status_code == 200
        body = resp.json()
        assert body["suite"] == "sl2"
        assert body["failed"] == 0
        assert body["passed"] > 0
        assert all(r["status"] == "pass" for r in body["results"])
        assert "constants" in body["calibration"]

    def test_verify_bad_suite(self, client):
        resp = client.post("/verify", json={"suite": "nope", "max_level": 2})
        assert resp.status_code == 422

    def test_verify_numeric(self, client):
        resp = client.post("/verify", json={
            "suite": "sl2", "max_level": 2, "mode": "numeric", "s0": "1/2"})
        assert resp.status_code == 200
        assert resp.json()["failed"] == 0
        assert resp.json()["s0"] == "1/2"

    def test_verify_hodge_suite(self, client):
        resp = client.post("/verify", json={"suite": "hodge", "max_level": 2})
        assert resp.status_code == 200
        assert resp.json()["failed"] == 0

    def test_budget_downgrade_labeled(self, client):
        resp = client.post("/verify", json={
            "suite": "kahler", "max_level": 2, "symbolic_budget": 1})
        assert resp.status_code == 200
        body = resp.json()
        assert body["mode"] == "certified"
        assert body["budget_downgrade"] is True
        assert body["failed"] == 0

    def test_cohomology(self, client):
        resp = client.get("/cohomology?max_level=2")
        assert resp.status_code == 200
        body = resp.json()
        assert (body["H0"], body["H1"], body["H2"]) == (1, 0, 1)
        assert body["refinement"] == "ok"

    def test_matrix_json(self, client):
        resp = client.get("/matrix?op=Delta_d&level=2")
        assert resp.status_code == 200
        body = resp.json()
        assert body["shape"] == [12, 12]
        assert body["sector_dims"]["omega0"] == 3

    def test_matrix_csv(self, client):
        resp = client.get("/matrix?op=L&level=2&sector=omega0&format=csv")
        assert resp.status_code == 200
        lines = resp.text.strip().splitlines()
        assert lines[0] == "row,col,value"
        assert len(lines) == 4  # three nonzero entries

    def test_matrix_bad_op(self, client):
        resp = client.get("/matrix?op=frobenius&level=2")
        assert resp.status_code == 422

    def test_calibration(self, client):
        resp = client.get("/calibration")
        assert resp.status_code == 200
        body = resp.json()
        assert body["constants"]["star_beta"] == "-q"
        assert body["constants"]["hodge"] == ["1", "i", "-i", "1"]

    def test_deterministic_reports(self, client):
        r1 = client.post("/verify", json={"suite": "calculus", "max_level": 2})
        r2 = client.post("/verify", json={"suite": "calculus", "max_level": 2})
        assert json.dumps(r1.json(), sort_keys=True) == \
            json.dumps(r2.json(), sort_keys=True)
