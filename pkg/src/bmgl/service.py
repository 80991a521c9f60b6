"""HTTP session service: the backend for the interactive play UI.

Endpoints (JSON everywhere except the JSON-lines transcript):

    POST /session                  {system, horizon, seed, sigma} -> {id, state}
    POST /session/{id}/move        {u: region literal} -> {v, audit, outcome}
    GET  /session/{id}/transcript  -> transcript in JSON-lines form
    GET  /healthz                  -> {"ok": true}

Illegal moves come back as 400 with a machine-readable reason; unknown
sessions are 404.  All replies are deterministic given the seed and the move
history.  Sessions live in memory; with a persistence directory each session
appends its config and moves to disk so a restarted service can resume them.
"""

from __future__ import annotations

import json
import os
import uuid
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse

from .regions import RegionError
from .sessions import GameSession, IllegalSessionMove, UnknownSessionConfig


class SessionStore:
    def __init__(self, persist_dir: Optional[str] = None):
        self.sessions: dict[str, GameSession] = {}
        self.persist_dir = Path(persist_dir) if persist_dir else None
        if self.persist_dir:
            self.persist_dir.mkdir(parents=True, exist_ok=True)

    def create(self, system: str, horizon: int, seed: int, sigma: str) -> str:
        session = GameSession(system, horizon, seed, sigma)
        session_id = uuid.uuid4().hex[:12]
        self.sessions[session_id] = session
        if self.persist_dir:
            config = {
                "system": system,
                "horizon": horizon,
                "seed": seed,
                "sigma": sigma,
            }
            (self.persist_dir / f"{session_id}.json").write_text(
                json.dumps(config) + "\n"
            )
        return session_id

    def get(self, session_id: str) -> GameSession:
        if session_id not in self.sessions:
            self._try_load(session_id)
        if session_id not in self.sessions:
            raise KeyError(session_id)
        return self.sessions[session_id]

    def _try_load(self, session_id: str) -> None:
        if not self.persist_dir:
            return
        config_path = self.persist_dir / f"{session_id}.json"
        if not config_path.exists():
            return
        config = json.loads(config_path.read_text())
        session = GameSession(
            config["system"], config["horizon"], config["seed"], config["sigma"]
        )
        moves_path = self.persist_dir / f"{session_id}.moves.jsonl"
        if moves_path.exists():
            for line in moves_path.read_text().splitlines():
                session.move(session.system.region_from_json(json.loads(line)))
        self.sessions[session_id] = session

    def record_move(self, session_id: str, move_json) -> None:
        if self.persist_dir:
            with open(self.persist_dir / f"{session_id}.moves.jsonl", "a") as fh:
                fh.write(json.dumps(move_json) + "\n")


def create_app(persist_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="bmgl session service")
    store = SessionStore(persist_dir)
    app.state.store = store

    @app.get("/healthz")
    def healthz():
        return {"ok": True}

    @app.post("/session")
    def create_session(body: dict):
        try:
            session_id = store.create(
                body.get("system", "baire"),
                int(body.get("horizon", 16)),
                int(body.get("seed", int(os.environ.get("BMGL_SEED", "0")))),
                body.get("sigma", "closure0"),
            )
        except (UnknownSessionConfig, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        return {"id": session_id, "state": store.get(session_id).state()}

    @app.post("/session/{session_id}/move")
    def post_move(session_id: str, body: dict):
        try:
            session = store.get(session_id)
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown session") from None
        if "u" not in body:
            raise HTTPException(status_code=400, detail={"reason": "missing move"})
        try:
            u = session.system.region_from_json(body["u"])
        except RegionError as exc:
            raise HTTPException(status_code=400, detail={"reason": str(exc)}) from None
        try:
            v, audit, outcome = session.move(u)
        except IllegalSessionMove as exc:
            raise HTTPException(status_code=400, detail={"reason": exc.reason}) from None
        store.record_move(session_id, session.system.region_to_json(u))
        return {
            "v": session.system.region_to_json(v),
            "audit": audit.to_json_dict(session.system) if audit else None,
            "outcome": outcome.to_json_dict() if outcome else None,
            "state": session.state(),
        }

    @app.get("/session/{session_id}/transcript", response_class=PlainTextResponse)
    def get_transcript(session_id: str):
        try:
            session = store.get(session_id)
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown session") from None
        return session.transcript_json_lines()

    return app


def run_service(host: str = "127.0.0.1", port: int = 8421, persist_dir=None) -> None:
    import uvicorn

    uvicorn.run(create_app(persist_dir), host=host, port=port, log_level="warning")
