"""HTTP/WebSocket surface over the session manager (FastAPI)."""

from __future__ import annotations

import asyncio
import queue
from pathlib import Path
from typing import Optional

from fastapi import Depends, FastAPI, HTTPException, Request, WebSocket, WebSocketDisconnect
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from babelbot.engine.types import LlmProtocolError, LlmTimeout, NoFixture
from babelbot.gateway.session import (
    NoPendingPlan,
    SessionBusy,
    SessionManager,
    SessionUnknown,
)

HEARTBEAT_INTERVAL_S = 1.0


class CreateSessionBody(BaseModel):
    map: Optional[str] = None


class CommandBody(BaseModel):
    text: str


class LanguageBody(BaseModel):
    code: Optional[str] = None


def create_app(manager: SessionManager, console_dir: Path | str | None = None) -> FastAPI:
    app = FastAPI(title="babelbot gateway", version="0.1.0")
    app.state.manager = manager

    def check_token(request: Request) -> None:
        token = manager.config.bearer_token
        if not token:
            return
        header = request.headers.get("authorization", "")
        if header != f"Bearer {token}":
            raise HTTPException(status_code=401, detail="invalid bearer token")

    guarded = [Depends(check_token)]

    @app.post("/sessions", dependencies=guarded)
    def create_session(body: CreateSessionBody | None = None):
        session = manager.create_session(body.map if body else None)
        return {"id": session.id, "state": session.state_snapshot()}

    @app.get("/maps", dependencies=guarded)
    def list_maps():
        return {"maps": sorted(manager.bundled_maps())}

    @app.get("/sessions/{session_id}/state", dependencies=guarded)
    def session_state(session_id: str):
        return _get(session_id).state_snapshot()

    @app.post("/sessions/{session_id}/command", dependencies=guarded)
    def command(session_id: str, body: CommandBody):
        _get(session_id)
        try:
            result = manager.submit_command(session_id, body.text)
        except SessionBusy as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        except (LlmTimeout, LlmProtocolError) as exc:
            raise HTTPException(
                status_code=502, detail=f"{exc} (retry the command)"
            )
        except NoFixture as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return result.to_json()

    @app.post("/sessions/{session_id}/confirm", dependencies=guarded)
    def confirm(session_id: str, body: CommandBody):
        _get(session_id)
        try:
            return manager.confirm(session_id, body.text)
        except NoPendingPlan as exc:
            raise HTTPException(status_code=409, detail=str(exc))

    @app.post("/sessions/{session_id}/abort", dependencies=guarded)
    def abort(session_id: str):
        _get(session_id)
        return manager.abort(session_id)

    @app.post("/sessions/{session_id}/language", dependencies=guarded)
    def set_language(session_id: str, body: LanguageBody):
        _get(session_id)
        return manager.set_language(session_id, body.code)

    def _get(session_id: str):
        try:
            return manager.get(session_id)
        except SessionUnknown as exc:
            raise HTTPException(status_code=404, detail=str(exc))

    @app.websocket("/sessions/{session_id}/events")
    async def events(websocket: WebSocket, session_id: str, since: int = 0, token: str = ""):
        expected = manager.config.bearer_token
        if expected and token != expected:
            await websocket.close(code=4401)
            return
        try:
            session = manager.get(session_id)
        except SessionUnknown:
            await websocket.close(code=4404)
            return
        await websocket.accept()
        q = session.subscribe(since=since)
        loop = asyncio.get_event_loop()
        try:
            while True:
                try:
                    event = await loop.run_in_executor(
                        None, lambda: q.get(timeout=HEARTBEAT_INTERVAL_S)
                    )
                except queue.Empty:
                    session.heartbeat()
                    continue
                await websocket.send_json(event)
        except (WebSocketDisconnect, RuntimeError):
            pass
        finally:
            session.unsubscribe(q)

    if console_dir is not None and Path(console_dir).is_dir():
        app.mount("/console", StaticFiles(directory=str(console_dir), html=True), name="console")

    return app
