import json
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from touchline.cli import main
from touchline.service import create_app

DATA = Path(__file__).parent / "data"
CANONICAL_LIB = "src/touchline/data/strategies_canonical.json"

PILOT_PAYLOAD = {
    "team": {
        "A1": 0.85, "A2": 0.50, "A4": 0.85, "A5": 0.50, "A8": 0.35,
        "active": ["A1", "A2", "A4", "A5", "A8"],
    },
    "state": {"time_remaining": 0.5, "score_state": 0},
}


@pytest.fixture()
def client(tmp_path):
    app = create_app(library_path=CANONICAL_LIB, sessions_dir=str(tmp_path / "sessions"))
    return TestClient(app)


@pytest.fixture()
def default_client(tmp_path):
    app = create_app(sessions_dir=str(tmp_path / "sessions"))
    return TestClient(app)


class TestStrategies:
    def test_library_listing(self, client):
        resp = client.get("/strategies")
        assert resp.status_code == 200
        body = resp.json()
        assert body["count"] == 5
        assert body["strategies"][0]["name"] == "High Pressing"
        assert body["strategies"][0]["profile"]["A5"] == 0.90

    def test_default_library_has_twenty(self, default_client):
        assert default_client.get("/strategies").json()["count"] == 20

    def test_reload(self, client):
        assert client.post("/strategies/reload").json() == {"count": 5}


class TestRecommend:
    def test_pilot_payload_chooses_build_up(self, client):
        resp = client.post("/recommend", json=PILOT_PAYLOAD)
        assert resp.status_code == 200
        body = resp.json()
        assert body["chosen"] == "Build-up Play"
        assert body["entries"][0]["rank"] == 1
        assert body["entries"][0]["name"] == "Build-up Play"
        assert body["diagnostics"]["A8"]["label"] == "deficit"

    def test_validation_error_is_field_level_400(self, client):
        payload = {"team": {f"A{i}": 0.5 for i in range(1, 15)} | {"A2": 1.9}}
        resp = client.post("/recommend", json=payload)
        assert resp.status_code == 400
        body = resp.json()
        assert body["error"] == "validation_error"
        assert body["field"] == "A2"
        assert "A2" in body["message"]

    def test_missing_team_is_400(self, client):
        resp = client.post("/recommend", json={"state": {}})
        assert resp.status_code == 400
        assert resp.json()["field"] == "team"

    def test_shape_mismatch_is_422(self, client):
        payload = dict(PILOT_PAYLOAD, opp={f"A{i}": 0.5 for i in range(1, 15)})
        resp = client.post("/recommend", json=payload)
        assert resp.status_code == 422
        assert resp.json()["error"] == "shape_mismatch"

    def test_stateless_scoring_leaves_no_sessions(self, client, tmp_path):
        client.post("/recommend", json=PILOT_PAYLOAD)
        sessions_dir = tmp_path / "sessions"
        assert list(sessions_dir.glob("*.json")) == []

    def test_concurrent_identical_requests_return_identical_bodies(self, client):
        def call(_):
            return client.post("/recommend", json=PILOT_PAYLOAD).content

        with ThreadPoolExecutor(max_workers=8) as pool:
            bodies = list(pool.map(call, range(32)))
        assert len(set(bodies)) == 1


class TestWhatIf:
    def test_energy_override_promotes_fast_counterattack(self, client):
        resp = client.post(
            "/whatif",
            json={"base": PILOT_PAYLOAD, "overrides": {"team": {"A8": 0.80}}},
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["base"]["chosen"] == "Build-up Play"
        assert body["variant"]["chosen"] == "Fast Counterattack"
        deltas = {d["name"]: d for d in body["rank_deltas"]}
        assert deltas["Fast Counterattack"]["new_rank"] == 1
        assert deltas["Fast Counterattack"]["delta"] > 0

    def test_noop_whatif_has_zero_deltas(self, client):
        resp = client.post("/whatif", json={"base": PILOT_PAYLOAD, "overrides": {}})
        assert resp.status_code == 200
        assert all(d["delta"] == 0 for d in resp.json()["rank_deltas"])

    def test_missing_base_is_400(self, client):
        resp = client.post("/whatif", json={"overrides": {}})
        assert resp.status_code == 400
        assert resp.json()["field"] == "base"


class TestSessions:
    def test_unknown_session_is_404(self, client):
        resp = client.get("/sessions/unknown")
        assert resp.status_code == 404
        assert resp.json()["error"] == "not_found"

    def test_create_and_recall(self, client):
        resp = client.post(
            "/sessions",
            json={"id": "pilot", "team": PILOT_PAYLOAD["team"], "state": PILOT_PAYLOAD["state"]},
        )
        assert resp.status_code == 200
        record = client.get("/sessions/pilot").json()
        assert record["id"] == "pilot"
        assert record["team"]["A8"] == 0.35
        assert len(record["state_history"]) == 1

    def test_history_is_append_only_and_ordered(self, client):
        client.post("/sessions", json={"id": "s1", "team": PILOT_PAYLOAD["team"], "state": {"time_remaining": 1.0}})
        client.post("/sessions", json={"id": "s1", "state": {"time_remaining": 0.5}})
        client.post("/sessions", json={"id": "s1", "state": {"time_remaining": 0.2}})
        record = client.get("/sessions/s1").json()
        times = [snap["timestamp"] for snap in record["state_history"]]
        assert times == sorted(times)
        assert [s["state"]["time_remaining"] for s in record["state_history"]] == [1.0, 0.5, 0.2]

    def test_recommend_flag_appends_to_history(self, client):
        resp = client.post(
            "/sessions",
            json={
                "id": "withrec",
                "team": PILOT_PAYLOAD["team"],
                "state": PILOT_PAYLOAD["state"],
                "recommend": True,
            },
        )
        assert resp.status_code == 200
        record = resp.json()
        assert len(record["recommendations"]) == 1
        assert record["recommendations"][0]["recommendation"]["chosen"] == "Build-up Play"


class TestEvaluateEndpoints:
    def test_pilot_endpoint(self, client):
        resp = client.post("/evaluate/pilot", json={})
        assert resp.status_code == 200
        body = resp.json()
        assert body["chosen"] == "Build-up Play"
        assert body["distances"]["Build-up Play"] == pytest.approx(0.4444, abs=1e-4)

    def test_scenarios_endpoint(self, default_client):
        resp = default_client.post("/evaluate/scenarios", json={})
        assert resp.status_code == 200
        assert all(row["passed"] for row in resp.json())

    def test_robustness_endpoint_seeded(self, default_client):
        body = {"sigma": 0.05, "k": 10, "seed": 41}
        a = default_client.post("/evaluate/robustness", json=body).json()
        b = default_client.post("/evaluate/robustness", json=body).json()
        assert a == b

    def test_unknown_kind_is_400(self, client):
        resp = client.post("/evaluate/nope", json={})
        assert resp.status_code == 400


class TestCliParity:
    def test_cli_and_api_emit_identical_recommendation_json(self, client, tmp_path):
        team_file = tmp_path / "team.json"
        team_file.write_text(json.dumps(PILOT_PAYLOAD["team"]))
        out_file = tmp_path / "rec.json"
        code = main(
            [
                "recommend",
                "--team", str(team_file),
                "--library", CANONICAL_LIB,
                "--time-remaining", "0.5",
                "--json", str(out_file),
            ]
        )
        assert code == 0
        cli_payload = json.loads(out_file.read_text())
        api_payload = client.post("/recommend", json=PILOT_PAYLOAD).json()
        assert cli_payload == api_payload
