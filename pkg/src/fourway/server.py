"""Demo server: one live session per websocket connection.

Protocol (JSON text frames, one reply per client message):

client -> server
  {"type": "hello", "dataset": <name>, "layout": "qwerty",
   "options": {"span_words": bool, "wrap": bool, "word_mode": bool},
   "cursor": "first" | "middle"}
  {"type": "event", "event": "up"|"down"|"left"|"right"|"select"|
   "backspace"|"reset"|"keypad"|"literal", "key": "2".."9", "letter": "a"}
  {"type": "trackball", "dx": number, "dy": number}

server -> client
  {"type": "state", "mode": ..., "prefix": [...], "entries":
   [{"text": ..., "highlights": [...]}], "cursor": int|null,
   "viable": {dir: [letters]}, "layout": {dir: [letters]}}
  {"type": "selected", "text": ...}
  {"type": "rejected", "reason": ...}
  {"type": "error", "message": ...}
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.staticfiles import StaticFiles

from .adapters import JitterConfig, TrackballDelta, trackball_to_event
from .layouts import Direction, LayoutError, builtin_layout, standard_keypad
from .matching import DirectionGroup, KeypadGroup, Literal, MatchOptions
from .session import (
    BackspaceEvent,
    Continue,
    DirectionalEvent,
    InputEvent,
    KeypadEvent,
    LiteralEvent,
    Rejected,
    ResetEvent,
    Selected,
    SelectEvent,
    Session,
)

STATIC_DIR = Path(__file__).resolve().parent.parent.parent / "frontend" / "static"


class ProtocolError(Exception):
    pass


def _prefix_token(constraint, session: Session) -> dict[str, Any]:
    if isinstance(constraint, DirectionGroup):
        return {
            "kind": "direction",
            "direction": constraint.direction.value,
            "letters": list(session.layout.group(constraint.direction)),
        }
    if isinstance(constraint, KeypadGroup):
        return {
            "kind": "keypad",
            "key": constraint.key,
            "letters": list(session.keypad.group(constraint.key)),
        }
    assert isinstance(constraint, Literal)
    return {"kind": "literal", "letter": constraint.letter}


def state_snapshot(session: Session) -> dict[str, Any]:
    view = session.view()
    return {
        "type": "state",
        "mode": view.mode,
        "prefix": [_prefix_token(c, session) for c in view.prefix],
        "entries": [
            {"text": e.text, "highlights": list(e.highlights)} for e in view.entries
        ],
        "cursor": view.cursor,
        "viable": {d.value: sorted(view.viable[d]) for d in Direction},
        "layout": {
            d.value: list(session.layout.group(d)) for d in Direction
        },
    }


_DIRECTIONS = {d.value: d for d in Direction}


def decode_event(message: dict[str, Any]) -> InputEvent:
    kind = message.get("event")
    if kind in _DIRECTIONS:
        return DirectionalEvent(_DIRECTIONS[kind])
    if kind == "select":
        return SelectEvent()
    if kind == "backspace":
        return BackspaceEvent()
    if kind == "reset":
        return ResetEvent()
    if kind == "keypad":
        key = message.get("key")
        if not isinstance(key, str) or key not in "23456789" or len(key) != 1:
            raise ProtocolError(f"bad keypad key: {key!r}")
        return KeypadEvent(key)
    if kind == "literal":
        letter = message.get("letter")
        if not isinstance(letter, str) or len(letter) != 1:
            raise ProtocolError(f"bad literal letter: {letter!r}")
        return LiteralEvent(letter.upper())
    raise ProtocolError(f"unknown event: {kind!r}")


class ConnectionHandler:
    """Decodes messages for one connection and owns its session."""

    def __init__(self, datasets: dict[str, list[str]], jitter: JitterConfig):
        self.datasets = datasets
        self.jitter = jitter
        self.session: Session | None = None

    def handle(self, message: dict[str, Any]) -> dict[str, Any]:
        try:
            return self._dispatch(message)
        except (ProtocolError, LayoutError, KeyError, ValueError) as exc:
            return {"type": "error", "message": str(exc)}

    def _dispatch(self, message: dict[str, Any]) -> dict[str, Any]:
        kind = message.get("type")
        if kind == "hello":
            return self._hello(message)
        if self.session is None:
            raise ProtocolError("send hello first")
        if kind == "event":
            return self._apply(decode_event(message))
        if kind == "trackball":
            dx, dy = message.get("dx"), message.get("dy")
            if not isinstance(dx, (int, float)) or not isinstance(dy, (int, float)):
                raise ProtocolError("trackball needs numeric dx and dy")
            direction = trackball_to_event(TrackballDelta(dx, dy), self.jitter)
            if direction is None:
                return state_snapshot(self.session)
            return self._apply(DirectionalEvent(direction))
        raise ProtocolError(f"unknown message type: {kind!r}")

    def _hello(self, message: dict[str, Any]) -> dict[str, Any]:
        name = message.get("dataset")
        if name not in self.datasets:
            raise ProtocolError(
                f"unknown dataset {name!r}; available: {', '.join(sorted(self.datasets))}"
            )
        opts = message.get("options") or {}
        options = MatchOptions(
            span_words=bool(opts.get("span_words", True)) or bool(opts.get("wrap", False)),
            wrap=bool(opts.get("wrap", False)),
            word_mode=bool(opts.get("word_mode", True)),
        )
        self.session = Session(
            self.datasets[name],
            builtin_layout(message.get("layout", "qwerty")),
            keypad=standard_keypad(),
            options=options,
            cursor_policy=message.get("cursor", "first"),
        )
        return state_snapshot(self.session)

    def _apply(self, event: InputEvent) -> dict[str, Any]:
        outcome = self.session.apply(event)
        if isinstance(outcome, Selected):
            return {"type": "selected", "text": outcome.entry.display_text}
        if isinstance(outcome, Rejected):
            return {"type": "rejected", "reason": outcome.reason}
        assert isinstance(outcome, Continue)
        return state_snapshot(self.session)


def build_app(
    datasets: dict[str, list[str]], jitter: JitterConfig = JitterConfig()
) -> FastAPI:
    app = FastAPI(title="fourway demo")

    @app.get("/api/datasets")
    def list_datasets() -> dict[str, Any]:
        return {"datasets": sorted(datasets)}

    @app.websocket("/ws")
    async def websocket_endpoint(ws: WebSocket) -> None:
        await ws.accept()
        handler = ConnectionHandler(datasets, jitter)
        try:
            while True:
                message = await ws.receive_json()
                await ws.send_json(handler.handle(message))
        except WebSocketDisconnect:
            pass

    if STATIC_DIR.is_dir():
        app.mount("/", StaticFiles(directory=STATIC_DIR, html=True), name="static")
    return app
