"""HTTP surface: every endpoint returns the standard record shape."""

import math

import pytest
from fastapi.testclient import TestClient

from monopole_algebra.service import create_app

RECORD_KEYS = {"command", "parameters", "results", "tolerances", "passed"}


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_ok(self, client):
        r = client.get("/health")
        assert r.status_code == 200
        assert r.json() == {"status": "ok"}


class TestHarmonic:
    def test_value_and_shape(self, client):
        r = client.post("/harmonic", json={"j": "1/2", "m": "-1/2", "mu": "1/2",
                                           "theta": 1.0, "phi": 0.5})
        assert r.status_code == 200
        body = r.json()
        assert set(body) == RECORD_KEYS
        assert body["command"] == "harmonic"
        assert body["passed"] is True
        want = math.cos(0.5) / math.sqrt(2 * math.pi)
        assert body["results"]["value"]["re"] == pytest.approx(want, abs=1e-14)
        assert body["results"]["value"]["im"] == pytest.approx(0.0, abs=1e-14)
        assert body["results"]["parity"]["partner"]["mu"] == "-1/2"

    def test_integer_arguments_accepted(self, client):
        r = client.post("/harmonic", json={"j": 1, "m": 0, "mu": 0,
                                           "theta": 0.8, "phi": 0.0})
        assert r.status_code == 200

    def test_m_exceeds_j_rejected(self, client):
        r = client.post("/harmonic", json={"j": "1/2", "m": "3/2", "mu": "1/2",
                                           "theta": 1.0, "phi": 0.0})
        assert r.status_code == 422
        assert "exceeds" in r.json()["detail"]

    def test_decimal_rejected(self, client):
        r = client.post("/harmonic", json={"j": "0.5", "m": "1/2", "mu": "1/2",
                                           "theta": 1.0, "phi": 0.0})
        assert r.status_code == 422

    def test_pole_rejected(self, client):
        r = client.post("/harmonic", json={"j": "1/2", "m": "1/2", "mu": "1/2",
                                           "theta": 0.0, "phi": 0.0})
        assert r.status_code == 422


class TestWigner3j:
    def test_exact_payload(self, client):
        r = client.post("/wigner3j", json={"j1": "1/2", "j2": "1/2", "j3": 1,
                                           "m1": "1/2", "m2": "-1/2", "m3": 0})
        assert r.status_code == 200
        res = r.json()["results"]
        assert res["sign"] == 1
        assert res["radicand"] == {"numerator": 1, "denominator": 6}
        assert res["value"] == pytest.approx(math.sqrt(1 / 6), abs=1e-15)
        assert res["rendered"] == "√(1/6)"

    def test_zero_symbol(self, client):
        r = client.post("/wigner3j", json={"j1": 1, "j2": 1, "j3": 1,
                                           "m1": 0, "m2": 0, "m3": 0})
        assert r.json()["results"] == {"sign": 0,
                                       "radicand": {"numerator": 0, "denominator": 1},
                                       "value": 0.0, "rendered": "0"}

    def test_named_argument_in_error(self, client):
        r = client.post("/wigner3j", json={"j1": "1/2", "j2": "1/2", "j3": 1,
                                           "m1": "1/2", "m2": "abc", "m3": 0})
        assert r.status_code == 422
        assert "m2" in r.json()["detail"]


class TestGaugeCheck:
    def test_passes(self, client):
        r = client.post("/gauge-check", json={"samples": 25, "seed": 4})
        assert r.status_code == 200
        body = r.json()
        assert body["passed"] is True
        assert body["results"]["coefficient_mean"] == pytest.approx(-0.5, abs=1e-12)
        assert body["tolerances"] == {"pass_threshold": 1e-10}

    def test_parity_variant(self, client):
        r = client.post("/gauge-check", json={"samples": 25, "seed": 4,
                                              "variant": "parity"})
        assert r.json()["results"]["coefficient_mean"] == pytest.approx(0.5, abs=1e-12)

    def test_unknown_variant(self, client):
        r = client.post("/gauge-check", json={"samples": 5, "variant": "other"})
        assert r.status_code == 422

    def test_zero_samples_rejected(self, client):
        r = client.post("/gauge-check", json={"samples": 0})
        assert r.status_code == 422


class TestSelectionTable:
    def test_row_shape(self, client):
        r = client.post("/selection-table", json={"j_max": "3/2", "n_theta": 32,
                                                  "n_phi": 32})
        assert r.status_code == 200
        body = r.json()
        rows = body["results"]["rows"]
        assert body["results"]["row_count"] == len(rows) == 26
        first = rows[0]
        assert set(first) == {"j", "m", "j_prime", "m_prime", "component",
                              "operator", "re_value", "im_value", "verdict",
                              "dual_agreement"}
        assert first["operator"] == "pseudoscalar"

    def test_scalar_operator(self, client):
        r = client.post("/selection-table", json={"j_max": "3/2", "operator": "scalar",
                                                  "n_theta": 32, "n_phi": 32})
        verdicts = {row["verdict"] for row in r.json()["results"]["rows"]}
        assert verdicts == {"allowed", "forbidden"}

    def test_bad_operator(self, client):
        r = client.post("/selection-table", json={"j_max": "3/2", "operator": "vector"})
        assert r.status_code == 422

    def test_j_max_below_mu(self, client):
        r = client.post("/selection-table", json={"j_max": "1/2", "mu": "3/2"})
        assert r.status_code == 422


class TestOrthonormality:
    def test_passes(self, client):
        r = client.post("/orthonormality", json={"mu": "1/2", "j_max": "3/2",
                                                 "n_theta": 32, "n_phi": 32})
        assert r.status_code == 200
        body = r.json()
        assert body["passed"] is True
        assert body["results"]["dimension"] == 6
        assert body["results"]["max_off_diagonal"] < 1e-12
        assert body["tolerances"]["off_diagonal"] == 1e-9
        assert body["tolerances"]["diagonal_spread"] == 1e-10

    def test_round_trip_matches_library(self, client, grid32):
        from monopole_algebra import HalfInt, harmonic_gram

        r = client.post("/orthonormality", json={"mu": "1/2", "j_max": "3/2",
                                                 "n_theta": 32, "n_phi": 32})
        rep = harmonic_gram(HalfInt.parse("1/2"), HalfInt.parse("3/2"), grid32)
        assert r.json()["results"]["max_off_diagonal"] == rep.max_off_diagonal
        assert r.json()["results"]["diagonal_mean"] == rep.diagonal_mean
