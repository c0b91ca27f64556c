"""Stateless HTTP+JSON API over the classifier, move model, and engine.

Endpoints: POST /api/classify, POST /api/moves, POST /api/engine-move, and
GET /api/health. Every non-2xx body is a single error object of the form
{"code": ..., "message": ...}. When a built browser UI is available its
static files are served at the root path.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .classifier import Outcome, classify, position_report
from .core import InvalidPositionError, Position, apply_move, is_terminal, legal_moves
from .oracle import OracleTable, solve
from .strategy import DEFAULT_ENGINE_BUDGET, TerminalPositionError, engine_move


class _BadRequest(Exception):
    def __init__(self, code: str, message: str, status: int = 400):
        self.code = code
        self.message = message
        self.status = status


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


async def _read_body(request: Request) -> dict:
    try:
        body = await request.json()
    except (json.JSONDecodeError, UnicodeDecodeError):
        raise _BadRequest("bad_position", "request body must be a JSON object")
    if not isinstance(body, dict):
        raise _BadRequest("bad_position", "request body must be a JSON object")
    return body


def _parse_position(body: dict) -> Position:
    piles = body.get("piles")
    if not isinstance(piles, list):
        raise _BadRequest("bad_position", "piles must be a list of integers")
    for q in piles:
        if not isinstance(q, int) or isinstance(q, bool):
            raise _BadRequest("bad_position", f"pile sizes must be integers, got {q!r}")
    try:
        return Position(tuple(piles))
    except InvalidPositionError as exc:
        raise _BadRequest("bad_position", str(exc))


def default_static_dir() -> Optional[Path]:
    env = os.environ.get("SDNIM_STATIC_DIR")
    candidates = []
    if env:
        candidates.append(Path(env))
    candidates.append(Path(__file__).resolve().parents[2] / "frontend" / "dist")
    candidates.append(Path.cwd() / "frontend" / "dist")
    for cand in candidates:
        if cand.is_dir():
            return cand
    return None


def create_app(static_dir: Optional[Path] = None) -> FastAPI:
    app = FastAPI(title="sdnim", docs_url=None, redoc_url=None)

    @app.exception_handler(_BadRequest)
    async def _bad_request_handler(_: Request, exc: _BadRequest) -> JSONResponse:
        return _error_response(exc.status, exc.code, exc.message)

    @app.get("/api/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.post("/api/classify")
    async def classify_endpoint(request: Request) -> dict:
        body = await _read_body(request)
        pos = _parse_position(body)
        return {"outcome": classify(pos).value, "report": position_report(pos)}

    @app.post("/api/moves")
    async def moves_endpoint(request: Request) -> dict:
        body = await _read_body(request)
        pos = _parse_position(body)
        table = OracleTable()
        moves = []
        for m in legal_moves(pos):
            child = apply_move(pos, m)
            outcome = classify(child)
            if outcome is Outcome.UNKNOWN:
                if child.total <= DEFAULT_ENGINE_BUDGET:
                    outcome = solve(child, table)
                else:
                    raise _BadRequest(
                        "unsupported_n",
                        f"no exact outcome for a {child.n}-pile child of this size",
                        status=422,
                    )
            moves.append(
                {
                    "move": {
                        "delete_index": m.delete_index,
                        "split_index": m.split_index,
                        "left": m.left,
                        "right": m.right,
                    },
                    "resulting": list(child.piles),
                    "outcome": outcome.value,
                }
            )
        return {"moves": moves}

    @app.post("/api/engine-move")
    async def engine_move_endpoint(request: Request) -> dict:
        body = await _read_body(request)
        pos = _parse_position(body)
        budget = body.get("budget", DEFAULT_ENGINE_BUDGET)
        if not isinstance(budget, int) or isinstance(budget, bool) or budget < 0:
            raise _BadRequest("bad_position", "budget must be a non-negative integer")
        if is_terminal(pos):
            raise _BadRequest("terminal", f"{pos} is terminal, no move exists", status=409)
        try:
            advice = engine_move(pos, budget=budget)
        except TerminalPositionError as exc:
            raise _BadRequest("terminal", str(exc), status=409)
        return {"advice": advice.to_json_dict()}

    static = static_dir if static_dir is not None else default_static_dir()
    if static is not None:
        app.mount("/", StaticFiles(directory=str(static), html=True), name="ui")

    return app
