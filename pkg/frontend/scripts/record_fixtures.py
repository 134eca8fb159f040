#!/usr/bin/env python3
"""Record API fixtures for the dashboard contract tests.

Starts the real service in-process, replays the pilot session requests, and
saves the raw response bodies under frontend/fixtures/. Rerun after any
backend change that affects payloads, then rerun the vitest suite.
"""

import json
import sys
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from touchline.library import default_library_path
from touchline.service import create_app

FRONTEND_DIR = Path(__file__).resolve().parent.parent
FIXTURES_DIR = FRONTEND_DIR / "fixtures"

PILOT_RECOMMEND = {
    "team": {
        "A1": 0.85, "A2": 0.50, "A4": 0.85, "A5": 0.50, "A8": 0.35,
        "active": ["A1", "A2", "A4", "A5", "A8"],
    },
    "state": {"time_remaining": 0.5, "score_state": 0},
}

PILOT_WHATIF_A8 = {
    "base": PILOT_RECOMMEND,
    "overrides": {"team": {"A8": 0.80}},
}


def main() -> int:
    canonical = default_library_path().parent / "strategies_canonical.json"
    FIXTURES_DIR.mkdir(exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        app = create_app(library_path=str(canonical), sessions_dir=tmp)
        client = TestClient(app)

        recorded = {
            "pilot_recommend.json": client.post("/recommend", json=PILOT_RECOMMEND),
            "pilot_whatif_a8.json": client.post("/whatif", json=PILOT_WHATIF_A8),
            "strategies.json": client.get("/strategies"),
        }
        for name, resp in recorded.items():
            if resp.status_code != 200:
                print(f"{name}: unexpected status {resp.status_code}: {resp.text}")
                return 1
            path = FIXTURES_DIR / name
            path.write_text(resp.text + "\n", encoding="utf-8")
            print(f"recorded {path} ({len(resp.text)} bytes)")

        requests_path = FIXTURES_DIR / "requests.json"
        requests_path.write_text(
            json.dumps(
                {"recommend": PILOT_RECOMMEND, "whatif_a8": PILOT_WHATIF_A8},
                indent=2,
            )
            + "\n",
            encoding="utf-8",
        )
        print(f"recorded {requests_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
