"""HTTP service exposing recommendation, what-if, library and evaluation APIs.

Scoring endpoints are pure and never touch disk; sessions persist as one
JSON file per id under the sessions directory, with writes serialized per
session. Validation failures return 400 with a field-level message, shape
mismatches 422, unknown sessions 404, always as {error, field, message}.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from pathlib import Path
from typing import Dict, Mapping, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .attributes import AttributeId, MatchState, ParamSet, decode_vector
from .distance import CombineMode
from .errors import ShapeMismatchError, TouchlineError
from .evaluation import (
    DEFAULT_ALPHA_GRID,
    DEFAULT_SEED,
    NoiseSpec,
    ablation,
    load_default_scenarios,
    load_scenarios,
    pilot_replication,
    robustness,
    run_scenarios,
    sensitivity_sweep,
    template_stability,
)
from .library import load_default_library, load_library
from .recommend import rank_strategies, whatif


class SessionStore:
    """Directory of JSON session records with per-session write locks."""

    def __init__(self, directory: Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._locks: Dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def _lock_for(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    def _path(self, session_id: str) -> Path:
        return self.directory / f"{session_id}.json"

    def get(self, session_id: str) -> Optional[dict]:
        path = self._path(session_id)
        if not path.exists():
            return None
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)

    def upsert(self, session_id: str, team=None, opponent=None, state=None, recommendation=None) -> dict:
        with self._lock_for(session_id):
            record = self.get(session_id) or {
                "id": session_id,
                "team": None,
                "opponent": None,
                "state_history": [],
                "recommendations": [],
            }
            if team is not None:
                record["team"] = team
            if opponent is not None:
                record["opponent"] = opponent
            stamp = time.time()
            if state is not None:
                record["state_history"].append({"timestamp": stamp, "state": state})
            if recommendation is not None:
                record["recommendations"].append({"timestamp": stamp, "recommendation": recommendation})
            with open(self._path(session_id), "w", encoding="utf-8") as fh:
                json.dump(record, fh, indent=2)
            return record


def _error_response(status: int, code: str, exc: Exception) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={
            "error": code,
            "field": getattr(exc, "field", None),
            "message": str(exc),
        },
    )


def _parse_recommend_body(body: Mapping):
    if "team" not in body or body["team"] is None:
        raise _field_error("team", "team vector is required")
    team = decode_vector(body["team"])
    opponent = decode_vector(body["opp"]) if body.get("opp") is not None else None
    state = MatchState.from_mapping(body.get("state") or {})
    params = ParamSet.from_mapping(body.get("params") or {})
    mode = CombineMode(body.get("combine_mode", CombineMode.SUBTRACTIVE.value))
    return team, opponent, state, params, mode


def _field_error(field: str, message: str) -> TouchlineError:
    exc = TouchlineError(message)
    exc.field = field
    return exc


def create_app(
    library_path: Optional[str] = None,
    fixtures_path: Optional[str] = None,
    sessions_dir: str = "sessions",
) -> FastAPI:
    app = FastAPI(title="touchline", version="0.1.0")
    app.state.library_path = library_path
    app.state.library = load_library(library_path) if library_path else load_default_library()
    app.state.fixtures_path = fixtures_path
    app.state.sessions = SessionStore(Path(sessions_dir))

    def fixtures():
        if app.state.fixtures_path:
            return load_scenarios(app.state.fixtures_path)
        return load_default_scenarios()

    @app.exception_handler(ShapeMismatchError)
    async def _shape_handler(request: Request, exc: ShapeMismatchError):
        return _error_response(422, "shape_mismatch", exc)

    @app.exception_handler(TouchlineError)
    async def _validation_handler(request: Request, exc: TouchlineError):
        return _error_response(400, "validation_error", exc)

    async def _json_body(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception:
            raise _field_error("body", "request body must be valid JSON")
        if not isinstance(body, dict):
            raise _field_error("body", "request body must be a JSON object")
        return body

    @app.get("/strategies")
    async def get_strategies():
        return {
            "count": len(app.state.library),
            "strategies": [
                dict(t.to_mapping(), id=t.id) for t in app.state.library
            ],
        }

    @app.post("/strategies/reload")
    async def reload_strategies():
        app.state.library = (
            load_library(app.state.library_path)
            if app.state.library_path
            else load_default_library()
        )
        return {"count": len(app.state.library)}

    @app.post("/recommend")
    async def post_recommend(request: Request):
        body = await _json_body(request)
        team, opponent, state, params, mode = _parse_recommend_body(body)
        rec = rank_strategies(team, opponent, app.state.library, state, params, mode)
        return rec.to_mapping()

    @app.post("/whatif")
    async def post_whatif(request: Request):
        body = await _json_body(request)
        base = body.get("base")
        if not isinstance(base, dict):
            raise _field_error("base", "base recommendation inputs are required")
        team, opponent, state, params, mode = _parse_recommend_body(base)
        overrides = body.get("overrides") or {}
        edits = None
        if overrides.get("team"):
            edits = {
                AttributeId.from_key(str(k)): float(v)
                for k, v in overrides["team"].items()
            }
        result = whatif(
            team,
            opponent,
            app.state.library,
            state,
            params,
            mode,
            state_overrides=overrides.get("state"),
            attribute_edits=edits,
        )
        return result.to_mapping()

    @app.post("/sessions")
    async def post_sessions(request: Request):
        body = await _json_body(request)
        session_id = str(body.get("id") or uuid.uuid4())
        team = body.get("team")
        opponent = body.get("opp")
        state = body.get("state")
        recommendation = None
        if body.get("recommend"):
            stored = app.state.sessions.get(session_id) or {}
            team_payload = team or stored.get("team")
            if team_payload is None:
                raise _field_error("team", "no team profile stored for this session")
            t, o, s, params, mode = _parse_recommend_body(
                {
                    "team": team_payload,
                    "opp": opponent or stored.get("opponent"),
                    "state": state or {},
                    "params": body.get("params") or {},
                    "combine_mode": body.get("combine_mode", CombineMode.SUBTRACTIVE.value),
                }
            )
            recommendation = rank_strategies(t, o, app.state.library, s, params, mode).to_mapping()
        record = app.state.sessions.upsert(
            session_id, team=team, opponent=opponent, state=state, recommendation=recommendation
        )
        return record

    @app.get("/sessions/{session_id}")
    async def get_session(session_id: str):
        record = app.state.sessions.get(session_id)
        if record is None:
            exc = _field_error("id", f"unknown session {session_id!r}")
            return _error_response(404, "not_found", exc)
        return record

    @app.post("/evaluate/{kind}")
    async def post_evaluate(kind: str, request: Request):
        body = await _json_body(request)
        seed = int(body.get("seed", DEFAULT_SEED))
        sigma = float(body.get("sigma", 0.05))
        k = int(body.get("k", 100))
        specs = fixtures()
        library = app.state.library
        if kind == "scenarios":
            results = run_scenarios(specs, library)
            return [
                {
                    "scenario": r.spec.name,
                    "chosen": r.recommendation.chosen.name,
                    "expected_top": list(r.spec.expected_top),
                    "passed": r.passed,
                }
                for r in results
            ]
        if kind == "robustness":
            noise = NoiseSpec(sigma=sigma, k=k, seed=seed, additive=bool(body.get("additive", False)))
            reports = [robustness(s, noise, library) for s in specs]
            return [
                {"scenario": r.scenario, "baseline": r.baseline, "r": r.r} for r in reports
            ]
        if kind == "stability":
            return [
                {
                    "scenario": s.name,
                    "stability": template_stability(s, sigma, k, seed, library),
                }
                for s in specs
            ]
        if kind == "sensitivity":
            alphas = [float(a) for a in body.get("alphas", DEFAULT_ALPHA_GRID)]
            reports = [sensitivity_sweep(s, alphas, library) for s in specs if s.opponent is not None]
            return [
                {
                    "scenario": r.scenario,
                    "stable": r.stable,
                    "rows": [
                        {"alpha": row.alpha, "chosen": row.chosen, "d_comb": row.d_comb}
                        for row in r.rows
                    ],
                }
                for r in reports
            ]
        if kind == "ablation":
            reports = [ablation(s, library) for s in specs]
            return [
                {
                    "scenario": r.scenario,
                    "baseline": r.baseline,
                    "entries": [
                        {
                            "attribute": e.attribute.name,
                            "chosen": e.chosen,
                            "top_shift": e.top_shift,
                            "rank_changes": e.rank_changes,
                        }
                        for e in r.entries
                    ],
                }
                for r in reports
            ]
        if kind == "pilot":
            report = pilot_replication()
            return {
                "distances": {name: d for name, d in report.distances},
                "chosen": report.chosen,
                "team": report.team.to_mapping(),
            }
        raise _field_error("kind", f"unknown evaluation kind {kind!r}")

    return app
