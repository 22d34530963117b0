"""HTTP service endpoints via the in-process test client."""

import pytest
from fastapi.testclient import TestClient

from mixedstirling.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestHealth:
    def test_ok(self, client):
        body = client.get("/health").json()
        assert body["status"] == "ok"


class TestValue:
    def test_plain(self, client):
        assert client.post("/value", json={"n": 4, "k": 2, "t": 2}).json() == {"value": 18}

    def test_restricted(self, client):
        body = client.post("/value", json={"n": 4, "k": 2, "t": 1, "size_set": "evens"}).json()
        assert body == {"value": 6}

    def test_pinned(self, client):
        body = client.post("/value", json={"n": 3, "k": 2, "t": 1, "r": 2}).json()
        assert body == {"value": 4}

    def test_big_values_survive_json(self, client):
        body = client.post("/value", json={"n": 40, "k": 3, "t": 5}).json()
        assert body["value"] > 2**63  # arbitrary precision end to end

    def test_k_zero_is_422(self, client):
        assert client.post("/value", json={"n": 4, "k": 0, "t": 2}).status_code == 422

    def test_size_set_with_r_is_422(self, client):
        resp = client.post("/value", json={"n": 4, "k": 2, "t": 1, "r": 1, "size_set": "evens"})
        assert resp.status_code == 422

    def test_bad_size_set_is_422(self, client):
        resp = client.post("/value", json={"n": 4, "k": 2, "t": 1, "size_set": "sometimes"})
        assert resp.status_code == 422


class TestTable:
    def test_panel(self, client):
        body = client.post("/table", json={"t": 3, "n_max": 7}).json()
        assert len(body["entries"]) == 15
        assert {"n": 7, "k": 3, "value": 3500} in body["entries"]


class TestSeries:
    def test_rows(self, client):
        body = client.post("/series", json={"k": 2, "t": 2, "order": 6}).json()
        by_n = {row["n"]: row for row in body["rows"]}
        assert by_n[6] == {"n": 6, "numerator": 15, "denominator": 16, "egf_value": 675}

    def test_weights(self, client):
        body = client.post("/series", json={"k": 1, "t": 1, "order": 4, "weights": "ones"}).json()
        assert [r["egf_value"] for r in body["rows"]] == [0, 1, 1, 1, 1]

    def test_conflicting_inputs_422(self, client):
        resp = client.post(
            "/series", json={"k": 1, "t": 1, "order": 4, "weights": "ones", "size_set": "evens"}
        )
        assert resp.status_code == 422


class TestVerify:
    def test_pass(self, client):
        body = client.post("/verify", json={"n_max": 3, "only": ["recur2", "closed2"]}).json()
        assert body["passed"] is True
        assert {r["name"] for r in body["identities"]} == {"recur2", "closed2"}

    def test_paper_literal_reported(self, client):
        body = client.post(
            "/verify",
            json={"n_max": 3, "only": ["recur2"], "include": ["paper-literal-rsf"]},
        ).json()
        assert body["passed"] is False
        failing = [r for r in body["identities"] if not r["passed"]]
        assert failing[0]["name"] == "paper-literal-rsf"
        assert failing[0]["counterexample"] is not None


class TestOracleCheck:
    def test_family(self, client):
        body = client.post("/oracle-check", json={"n_max": 4, "family": "mixed"}).json()
        assert body["passed"] is True

    def test_limit_is_400(self, client):
        assert client.post("/oracle-check", json={"n_max": 30}).status_code == 400
