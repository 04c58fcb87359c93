"""JSON-over-HTTP play service.

Sessions live in memory with LRU eviction; nothing persists across
restarts. The engine replies inside the same request that carried the
human move, so between requests it is always the human's turn (or the
game is over). See README for the frozen wire schema.
"""

from __future__ import annotations

import threading
import uuid
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.requests import Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import core, strategy
from .core import IllegalMoveError, InvalidPositionError, Move, Position

HUMAN = "human"
ENGINE = "engine"

ONGOING = "ongoing"
FINISHED = "finished"

DEFAULT_CAPACITY = 1024


class ApiError(Exception):
    """Service-level error carried to the client as {code, message}."""

    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class CreateSessionBody(BaseModel):
    piles: list[int]
    human_first: bool = True


class MoveBody(BaseModel):
    index: int
    amount: int


@dataclass
class GameSession:
    """One human-vs-engine game. Mutations happen under ``lock`` only."""

    id: str
    initial: Position
    position: Position
    to_move: Optional[str]
    history: list[tuple[str, Move]] = field(default_factory=list)
    status: str = ONGOING
    winner: Optional[str] = None
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def record_move(self, mover: str, move: Move) -> None:
        self.position = core.apply_move(self.position, move)
        self.history.append((mover, move))
        if core.is_terminal(self.position):
            self.status = FINISHED
            self.winner = mover
            self.to_move = None
        else:
            self.to_move = HUMAN if mover == ENGINE else ENGINE


class SessionStore:
    """Bounded in-memory session map with least-recently-used eviction."""

    def __init__(self, capacity: int = DEFAULT_CAPACITY):
        self.capacity = capacity
        self._sessions: OrderedDict[str, GameSession] = OrderedDict()
        self._lock = threading.Lock()

    def create(self, position: Position, human_first: bool) -> GameSession:
        session = GameSession(
            id=uuid.uuid4().hex,
            initial=position,
            position=position,
            to_move=HUMAN if human_first else ENGINE,
        )
        with self._lock:
            self._sessions[session.id] = session
            while len(self._sessions) > self.capacity:
                self._sessions.popitem(last=False)
        return session

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise ApiError(404, "unknown_session", f"no session {session_id!r}")
            self._sessions.move_to_end(session_id)
            return session

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)


def engine_move(position: Position) -> Move:
    """The engine's play: the constructed winning move when one exists,
    else the deterministic first legal move."""
    advice = strategy.best_move(position)
    move = advice.move if advice.move is not None else advice.fallback
    assert move is not None  # only terminal positions lack a move
    return move


def _move_json(move: Move) -> dict:
    return {"index": move.index, "amount": move.amount}


def _advice_json(advice: strategy.StrategyAdvice) -> dict:
    payload: dict = {"status": advice.status}
    if advice.move is not None:
        payload["move"] = _move_json(advice.move)
        payload["target_sg"] = advice.target_sg
    if advice.fallback is not None:
        payload["fallback"] = _move_json(advice.fallback)
    return payload


def session_json(
    session: GameSession, *, with_sg: bool = False, with_hint: bool = False
) -> dict:
    """Wire view of a session. Field names here are frozen for the UI."""
    payload = {
        "id": session.id,
        "position": list(session.position),
        "initial": list(session.initial),
        "to_move": session.to_move,
        "status": session.status,
        "winner": session.winner,
        "history": [
            {"mover": mover, "index": move.index, "amount": move.amount}
            for mover, move in session.history
        ],
        "legal_moves": [_move_json(m) for m in core.legal_moves(session.position)],
    }
    if with_sg:
        payload["sg"] = core.grundy_value(session.position)
    if with_hint:
        payload["hint"] = _advice_json(strategy.best_move(session.position))
    return payload


def create_app(store: Optional[SessionStore] = None) -> FastAPI:
    app = FastAPI(title="cdnim play service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions = store if store is not None else SessionStore()

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError) -> JSONResponse:
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message},
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(
        _request: Request, exc: RequestValidationError
    ) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={"code": "invalid_request", "message": str(exc.errors())},
        )

    @app.get("/healthz")
    def healthz() -> dict:
        return {"service": "cdnim", "status": "ok"}

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody) -> dict:
        try:
            position = core.make_position(body.piles)
        except InvalidPositionError as exc:
            raise ApiError(400, "invalid_position", str(exc))
        if core.is_terminal(position):
            raise ApiError(400, "invalid_position", "game already over")
        session = sessions.create(position, body.human_first)
        with session.lock:
            if session.to_move == ENGINE:
                session.record_move(ENGINE, engine_move(session.position))
            return session_json(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str, sg: bool = False, hint: bool = False) -> dict:
        session = sessions.get(session_id)
        with session.lock:
            return session_json(session, with_sg=sg, with_hint=hint)

    @app.post("/sessions/{session_id}/moves")
    def apply_human_move(session_id: str, body: MoveBody) -> dict:
        session = sessions.get(session_id)
        with session.lock:
            if session.status == FINISHED:
                raise ApiError(409, "session_finished", "the game is already over")
            if session.to_move != HUMAN:
                raise ApiError(409, "not_your_turn", "waiting for the engine")
            try:
                move = Move(body.index, body.amount)
                core.apply_move(session.position, move)  # validate before mutating
            except IllegalMoveError as exc:
                raise ApiError(400, exc.code, str(exc))
            session.record_move(HUMAN, move)
            if session.status == ONGOING:
                session.record_move(ENGINE, engine_move(session.position))
            return session_json(session)

    @app.get("/sessions/{session_id}/hint")
    def hint(session_id: str) -> dict:
        session = sessions.get(session_id)
        with session.lock:
            return _advice_json(strategy.best_move(session.position))

    return app
