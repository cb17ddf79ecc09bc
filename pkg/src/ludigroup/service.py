"""JSON/HTTP session service.

Sessions live in memory behind per-session locks; an optional file-backed
store writes one JSON record per session and can rebuild any session by
replaying its event log.  Blind sessions never serialize configurations to
clients before resolution.
"""

from __future__ import annotations

import json
import os
import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .catalog import get_game, list_games
from .catalog.analyze import analyze as analyze_game
from .catalog.schema import game_definition
from .engine import Archetype, GameSpec, PairedSession, Session, Status
from .errors import (
    InapplicableMoveError,
    InvalidSpecError,
    LudigroupError,
    NoSolutionError,
    NodeCapExceededError,
    OutOfCardsError,
    SessionTerminatedError,
    UnknownLabelError,
    WrongModeError,
)

ERROR_CODES = {
    UnknownLabelError: (404, "unknown_label"),
    InvalidSpecError: (400, "invalid_spec"),
    InapplicableMoveError: (400, "inapplicable_move"),
    OutOfCardsError: (400, "out_of_cards"),
    WrongModeError: (400, "wrong_mode"),
    SessionTerminatedError: (409, "session_over"),
    NoSolutionError: (400, "no_solution"),
    NodeCapExceededError: (400, "budget_exceeded"),
}


@dataclass
class SessionRecord:
    session_id: str
    spec: GameSpec
    session: Session
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def to_json(self) -> dict:
        return {
            "id": self.session_id,
            "spec": self.spec.to_json(),
            "events": self.session.events,
            "status": self.session.status.value,
            "created": self.created,
            "updated": self.updated,
        }


class SessionStore:
    """In-memory store with optional one-file-per-session persistence."""

    def __init__(self, directory: str | None = None):
        self.directory = directory
        self._records: dict[str, SessionRecord] = {}
        self._lock = threading.Lock()
        if directory:
            os.makedirs(directory, exist_ok=True)

    def create(self, spec: GameSpec) -> SessionRecord:
        record = SessionRecord(uuid.uuid4().hex, spec, Session(spec))
        with self._lock:
            self._records[record.session_id] = record
        self.persist(record)
        return record

    def get(self, session_id: str) -> SessionRecord:
        with self._lock:
            record = self._records.get(session_id)
        if record is None:
            record = self.load(session_id)
        if record is None:
            raise UnknownLabelError(session_id)
        return record

    def persist(self, record: SessionRecord) -> None:
        record.updated = time.time()
        if not self.directory:
            return
        path = os.path.join(self.directory, f"{record.session_id}.json")
        with open(path, "w") as fh:
            json.dump(record.to_json(), fh)

    def load(self, session_id: str) -> SessionRecord | None:
        if not self.directory:
            return None
        path = os.path.join(self.directory, f"{session_id}.json")
        if not os.path.exists(path):
            return None
        with open(path) as fh:
            data = json.load(fh)
        spec = GameSpec.from_json(data["spec"])
        session = Session.replay(spec, data["events"])
        record = SessionRecord(
            session_id=data["id"],
            spec=spec,
            session=session,
            created=data["created"],
            updated=data["updated"],
        )
        with self._lock:
            self._records[record.session_id] = record
        return record


class CreateSessionBody(BaseModel):
    game: str | None = None
    archetype: str | None = None
    blind: bool | None = None
    constrained: bool | None = None
    memory: bool | None = None
    seed: int = 0
    u0: str | None = None
    uf: str | None = None
    card_budget: int | dict[str, int] | None = None
    pair: dict | None = None  # {"left": {...}, "right": {...}, "mapping": {...}}


class MoveBody(BaseModel):
    generator: str
    side: str | None = None  # paired sessions: "left" (default) or "right"


class SubmitBody(BaseModel):
    word: list[str] | None = None
    prediction: str | None = None
    start: str | None = None


def _spec_from_body(body: dict) -> GameSpec:
    return GameSpec(
        game=body["game"],
        archetype=Archetype(body["archetype"]) if body.get("archetype") else None,
        blind=body.get("blind"),
        constrained=body.get("constrained"),
        memory=body.get("memory"),
        seed=body.get("seed", 0),
        u0=body.get("u0"),
        uf=body.get("uf"),
        card_budget=body.get("card_budget"),
    )


def create_app(store_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="ludigroup", version="0.1.0")
    store = SessionStore(store_dir)
    pairs: dict[str, PairedSession] = {}

    @app.exception_handler(LudigroupError)
    async def on_error(_request: Request, exc: LudigroupError):
        for cls, (code, slug) in ERROR_CODES.items():
            if isinstance(exc, cls):
                return JSONResponse({"code": slug, "message": str(exc)}, status_code=code)
        return JSONResponse({"code": "error", "message": str(exc)}, status_code=400)

    @app.get("/games")
    def games():
        out = []
        for gid in list_games():
            space = get_game(gid)
            out.append(
                {
                    "id": gid,
                    "display": space.metadata.get("display", gid),
                    "family": space.metadata.get("family"),
                    "archetype": space.metadata.get("archetype", "factorization"),
                    "generators": list(space.moves),
                }
            )
        return out

    @app.get("/games/{game_id}")
    def game_detail(game_id: str):
        space = get_game(game_id)
        definition = game_definition(space)
        definition["render"] = space.metadata.get("render", {})
        if "color_hint" in space.metadata:
            definition["color_hint"] = space.metadata["color_hint"]
        if "transversal" in space.metadata and space.metadata["transversal"]:
            definition["goals"] = [space.to_text(t) for t in space.metadata["transversal"]]
        if "state_names" in space.metadata:
            definition["state_names"] = space.metadata["state_names"]
        return definition

    @app.get("/games/{game_id}/analysis")
    def game_analysis(game_id: str):
        return json.loads(analyze_game(get_game(game_id)).to_json())

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        if body.pair is not None:
            pair = PairedSession.create(
                _spec_from_body(body.pair["left"]),
                _spec_from_body(body.pair["right"]),
                body.pair["mapping"],
            )
            sid = uuid.uuid4().hex
            pairs[sid] = pair
            return {"id": sid, "state": pair.visible_state()}
        if body.game is None:
            raise InvalidSpecError("a game id (or a pair block) is required")
        record = store.create(_spec_from_body(body.model_dump()))
        return {"id": record.session_id, "state": record.session.visible_state()}

    @app.get("/sessions/{sid}")
    def get_session(sid: str):
        if sid in pairs:
            return pairs[sid].visible_state()
        record = store.get(sid)
        return record.session.visible_state()

    @app.post("/sessions/{sid}/moves")
    def post_move(sid: str, body: MoveBody):
        if sid in pairs:
            return pairs[sid].play_move(body.generator, side=body.side or "left")
        record = store.get(sid)
        with record.lock:
            outcome = record.session.play_move(body.generator)
            store.persist(record)
        state = record.session.visible_state()
        state["newly_revealed"] = list(outcome.newly_revealed)
        return state

    @app.post("/sessions/{sid}/undo")
    def post_undo(sid: str):
        record = store.get(sid)
        with record.lock:
            record.session.undo()
            store.persist(record)
        return record.session.visible_state()

    @app.post("/sessions/{sid}/submit")
    def post_submit(sid: str, body: SubmitBody):
        record = store.get(sid)
        payload = body.word if body.word is not None else (body.prediction or body.start)
        if payload is None:
            raise InvalidSpecError("submit needs a word, a prediction, or a start")
        with record.lock:
            verdict = record.session.submit_sequence(payload)
            store.persist(record)
        state = record.session.visible_state()
        state["verdict"] = verdict.detail
        return state

    @app.post("/sessions/{sid}/impossible")
    def post_impossible(sid: str):
        record = store.get(sid)
        with record.lock:
            verdict = record.session.declare_impossible()
            store.persist(record)
        state = record.session.visible_state()
        state["verdict"] = verdict.detail
        return state

    @app.get("/sessions/{sid}/events")
    def get_events(sid: str):
        record = store.get(sid)
        return record.session.events

    ui_dir = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))), "frontend", "dist")
    if os.path.isdir(ui_dir):  # pragma: no cover - depends on frontend build
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    app.state.store = store
    return app
