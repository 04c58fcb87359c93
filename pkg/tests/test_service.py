import socket
import subprocess
import sys
import threading
import time

import httpx
import pytest
from fastapi.testclient import TestClient

from cdnim import Move, apply_move, grundy_value, make_position
from cdnim.service import SessionStore, create_app


@pytest.fixture()
def client():
    with TestClient(create_app()) as c:
        yield c


def replay(initial, history):
    position = make_position(initial)
    for entry in history:
        position = apply_move(position, Move(entry["index"], entry["amount"]))
    return position


class TestCreateSession:
    def test_human_first(self, client):
        r = client.post("/sessions", json={"piles": [6, 3, 2], "human_first": True})
        assert r.status_code == 201
        body = r.json()
        assert body["position"] == [6, 3, 2]
        assert body["to_move"] == "human"
        assert body["status"] == "ongoing"
        assert body["history"] == []
        assert len(body["legal_moves"]) == 3

    def test_engine_first_moves_immediately(self, client):
        r = client.post("/sessions", json={"piles": [6, 3, 2], "human_first": False})
        body = r.json()
        assert len(body["history"]) == 1
        assert body["history"][0]["mover"] == "engine"
        assert grundy_value(tuple(body["position"])) == 0

    def test_engine_first_from_zero_value_start(self, client):
        # Every successor of a value-0 position has a nonzero value, so the
        # engine's forced fallback still leaves a nonzero position.
        r = client.post("/sessions", json={"piles": [2, 2], "human_first": False})
        body = r.json()
        assert len(body["history"]) == 1
        assert grundy_value(tuple(body["position"])) > 0

    def test_rejects_finished_start(self, client):
        r = client.post("/sessions", json={"piles": [0], "human_first": True})
        assert r.status_code == 400
        assert r.json()["code"] == "invalid_position"

    def test_rejects_negative_piles(self, client):
        r = client.post("/sessions", json={"piles": [3, -1]})
        assert r.status_code == 400
        assert r.json()["code"] == "invalid_position"

    def test_rejects_malformed_body(self, client):
        r = client.post("/sessions", json={"piles": "nope"})
        assert r.status_code == 422
        assert r.json()["code"] == "invalid_request"


class TestMoves:
    def test_engine_replies_in_same_request(self, client):
        sid = client.post("/sessions", json={"piles": [6, 3, 2]}).json()["id"]
        r = client.post(f"/sessions/{sid}/moves", json={"index": 2, "amount": 1})
        assert r.status_code == 200
        body = r.json()
        assert [e["mover"] for e in body["history"]] == ["human", "engine"]
        assert body["to_move"] == "human"

    def test_unknown_session(self, client):
        r = client.post("/sessions/missing/moves", json={"index": 1, "amount": 1})
        assert r.status_code == 404
        assert r.json()["code"] == "unknown_session"

    def test_illegal_moves_reported_distinctly(self, client):
        sid = client.post("/sessions", json={"piles": [6, 2, 2]}).json()["id"]
        cases = [
            ({"index": 9, "amount": 1}, "index_out_of_range"),
            ({"index": 2, "amount": 8}, "amount_exceeds_pile"),
            ({"index": 1, "amount": 3}, "not_a_common_divisor"),
        ]
        for body, code in cases:
            r = client.post(f"/sessions/{sid}/moves", json=body)
            assert r.status_code == 400
            assert r.json()["code"] == code

    def test_finished_session_rejects_moves(self, client):
        sid = client.post("/sessions", json={"piles": [1]}).json()["id"]
        done = client.post(f"/sessions/{sid}/moves", json={"index": 1, "amount": 1})
        assert done.json()["status"] == "finished"
        assert done.json()["winner"] == "human"
        again = client.post(f"/sessions/{sid}/moves", json={"index": 1, "amount": 1})
        assert again.status_code == 409
        assert again.json()["code"] == "session_finished"

    def test_history_replays_to_position(self, client):
        body = client.post("/sessions", json={"piles": [12, 8], "human_first": False}).json()
        sid = body["id"]
        while body["status"] == "ongoing":
            move = body["legal_moves"][0]
            body = client.post(f"/sessions/{sid}/moves", json=move).json()
        assert body["status"] == "finished"
        assert replay(body["initial"], body["history"]) == tuple(body["position"])
        assert body["position"] == [0, 0]


class TestGetSession:
    def test_snapshot_fields(self, client):
        sid = client.post("/sessions", json={"piles": [4, 0]}).json()["id"]
        body = client.get(f"/sessions/{sid}").json()
        assert body["position"] == [4, 0]
        assert body["legal_moves"] == [
            {"index": 1, "amount": 1},
            {"index": 1, "amount": 2},
            {"index": 1, "amount": 4},
        ]
        assert "sg" not in body
        assert "hint" not in body

    def test_sg_and_hint_are_opt_in(self, client):
        sid = client.post("/sessions", json={"piles": [4, 0]}).json()["id"]
        body = client.get(f"/sessions/{sid}", params={"sg": True, "hint": True}).json()
        assert body["sg"] == 3
        assert body["hint"]["status"] == "winning"

    def test_unknown_session(self, client):
        r = client.get("/sessions/missing")
        assert r.status_code == 404


class TestHint:
    def test_winning_hint_reaches_zero(self, client):
        sid = client.post("/sessions", json={"piles": [6, 3, 2]}).json()["id"]
        hint = client.get(f"/sessions/{sid}/hint").json()
        assert hint["status"] == "winning"
        move = Move(hint["move"]["index"], hint["move"]["amount"])
        assert grundy_value(apply_move((6, 3, 2), move)) == 0
        assert hint["target_sg"] == 0

    def test_losing_hint_offers_fallback(self, client):
        sid = client.post("/sessions", json={"piles": [2, 2]}).json()["id"]
        hint = client.get(f"/sessions/{sid}/hint").json()
        assert hint["status"] == "losing"
        assert "move" not in hint
        assert hint["fallback"] == {"index": 1, "amount": 1}


class TestStore:
    def test_lru_eviction(self):
        with TestClient(create_app(SessionStore(capacity=2))) as client:
            first = client.post("/sessions", json={"piles": [3, 3]}).json()["id"]
            second = client.post("/sessions", json={"piles": [4, 4]}).json()["id"]
            assert client.get(f"/sessions/{first}").status_code == 200  # refresh
            third = client.post("/sessions", json={"piles": [5, 5]}).json()["id"]
            assert client.get(f"/sessions/{second}").status_code == 404
            assert client.get(f"/sessions/{first}").status_code == 200
            assert client.get(f"/sessions/{third}").status_code == 200

    def test_concurrent_moves_serialize(self, client):
        sid = client.post("/sessions", json={"piles": [24, 16]}).json()["id"]
        errors = []

        def hammer():
            for _ in range(40):
                body = client.get(f"/sessions/{sid}").json()
                if body["status"] == "finished":
                    return
                r = client.post(f"/sessions/{sid}/moves", json=body["legal_moves"][0])
                if r.status_code not in (200, 400, 409):
                    errors.append(r.status_code)

        threads = [threading.Thread(target=hammer) for _ in range(6)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()

        assert not errors
        body = client.get(f"/sessions/{sid}").json()
        movers = [e["mover"] for e in body["history"]]
        assert movers == ["human", "engine"] * (len(movers) // 2) + (
            ["human"] if len(movers) % 2 else []
        )
        assert replay(body["initial"], body["history"]) == tuple(body["position"])


class TestServeProcess:
    def test_cli_serve_answers_http(self):
        probe = socket.socket()
        probe.bind(("127.0.0.1", 0))
        port = probe.getsockname()[1]
        probe.close()
        proc = subprocess.Popen(
            [sys.executable, "-m", "cdnim", "serve", "--port", str(port)],
            stdout=subprocess.DEVNULL,
            stderr=subprocess.DEVNULL,
        )
        try:
            deadline = time.time() + 30
            while True:
                try:
                    r = httpx.get(f"http://127.0.0.1:{port}/healthz", timeout=1.0)
                    if r.status_code == 200:
                        break
                except httpx.HTTPError:
                    pass
                assert time.time() < deadline, "service never came up"
                time.sleep(0.2)
            made = httpx.post(
                f"http://127.0.0.1:{port}/sessions",
                json={"piles": [6, 3, 2]},
                timeout=5.0,
            )
            assert made.status_code == 201
        finally:
            proc.terminate()
            proc.wait(timeout=10)
