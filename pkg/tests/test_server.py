from __future__ import annotations

import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from starlette.testclient import TestClient

from fourway.layouts import builtin_layout, standard_keypad
from fourway.matching import MatchOptions
from fourway.server import build_app, state_snapshot
from fourway.session import DirectionalEvent, Session
from fourway.layouts import Direction

DATASETS = {
    "demo": ["T.S., Eliot", "John Updike", "Jorge Luis Borges"],
    "tiny": ["Only"],
}


@pytest.fixture()
def client():
    app = build_app(DATASETS)
    with TestClient(app) as c:
        yield c


def hello(ws, dataset="demo", **extra):
    ws.send_json({"type": "hello", "dataset": dataset, "layout": "qwerty", **extra})
    return ws.receive_json()


class TestProtocol:
    def test_hello_snapshot(self, client):
        with client.websocket_connect("/ws") as ws:
            state = hello(ws)
            assert state["type"] == "state"
            assert state["mode"] == "selection"
            assert [e["text"] for e in state["entries"]] == DATASETS["demo"]
            assert state["layout"]["up"] == list("QWERTYUIOP")

    def test_event_filters(self, client):
        with client.websocket_connect("/ws") as ws:
            hello(ws)
            ws.send_json({"type": "event", "event": "up"})
            state = ws.receive_json()
            assert state["type"] == "state"
            # "John Updike" matches via the word start "Updike"
            assert [e["text"] for e in state["entries"]] == ["T.S., Eliot", "John Updike"]
            ws.send_json({"type": "event", "event": "left"})
            state = ws.receive_json()
            assert [e["text"] for e in state["entries"]] == ["T.S., Eliot"]

    def test_select_unique(self, client):
        with client.websocket_connect("/ws") as ws:
            hello(ws, dataset="tiny")
            ws.send_json({"type": "event", "event": "select"})
            reply = ws.receive_json()
            assert reply == {"type": "selected", "text": "Only"}

    def test_rejected_dead_end(self, client):
        with client.websocket_connect("/ws") as ws:
            hello(ws, dataset="tiny")
            ws.send_json({"type": "event", "event": "down"})
            reply = ws.receive_json()
            assert reply == {"type": "rejected", "reason": "dead end"}

    def test_trackball_suppressed_returns_same_snapshot(self, client):
        with client.websocket_connect("/ws") as ws:
            before = hello(ws)
            ws.send_json({"type": "trackball", "dx": 0, "dy": 0})
            assert ws.receive_json() == before

    def test_trackball_classified(self, client):
        with client.websocket_connect("/ws") as ws:
            hello(ws)
            ws.send_json({"type": "trackball", "dx": 1, "dy": 8})
            state = ws.receive_json()
            assert [e["text"] for e in state["entries"]] == ["T.S., Eliot", "John Updike"]

    def test_event_before_hello(self, client):
        with client.websocket_connect("/ws") as ws:
            ws.send_json({"type": "event", "event": "up"})
            reply = ws.receive_json()
            assert reply["type"] == "error"

    def test_malformed_message_keeps_session(self, client):
        with client.websocket_connect("/ws") as ws:
            before = hello(ws)
            ws.send_json({"type": "event", "event": "sideways"})
            assert ws.receive_json()["type"] == "error"
            ws.send_json({"type": "trackball", "dx": 0, "dy": 0})
            assert ws.receive_json() == before

    def test_unknown_dataset(self, client):
        with client.websocket_connect("/ws") as ws:
            reply = hello(ws, dataset="missing")
            assert reply["type"] == "error"

    def test_datasets_endpoint(self, client):
        resp = client.get("/api/datasets")
        assert resp.status_code == 200
        assert resp.json() == {"datasets": ["demo", "tiny"]}


class TestGoldenEquivalence:
    def test_replies_equal_direct_session_snapshots(self, client):
        script = ["up", "left", "backspace", "right", "reset", "up"]
        session = Session(
            DATASETS["demo"],
            builtin_layout("qwerty"),
            keypad=standard_keypad(),
            options=MatchOptions(span_words=True, wrap=False, word_mode=True),
        )
        with client.websocket_connect("/ws") as ws:
            assert hello(ws) == state_snapshot(session)
            for name in script:
                ws.send_json({"type": "event", "event": name})
                reply = ws.receive_json()
                if name in ("up", "down", "left", "right"):
                    session.apply(DirectionalEvent(Direction(name)))
                elif name == "backspace":
                    from fourway.session import BackspaceEvent

                    session.apply(BackspaceEvent())
                elif name == "reset":
                    from fourway.session import ResetEvent

                    session.apply(ResetEvent())
                assert reply == state_snapshot(session)


class TestIsolation:
    def test_connections_do_not_share_state(self, client):
        with client.websocket_connect("/ws") as a, client.websocket_connect("/ws") as b:
            snap_a = hello(a)
            snap_b = hello(b)
            assert snap_a == snap_b
            a.send_json({"type": "event", "event": "up"})
            a.receive_json()
            b.send_json({"type": "trackball", "dx": 0, "dy": 0})
            assert b.receive_json() == snap_b
