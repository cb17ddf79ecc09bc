import json
import random

import pytest
from fastapi.testclient import TestClient

from ludigroup.service import create_app


@pytest.fixture()
def client(tmp_path):
    app = create_app(store_dir=str(tmp_path / "sessions"))
    with TestClient(app) as c:
        yield c


def test_games_listing(client):
    games = client.get("/games").json()
    ids = {g["id"] for g in games}
    assert {"linear5", "even", "rubik", "elephants_reflected"} <= ids


def test_game_detail_has_render_metadata(client):
    detail = client.get("/games/elephants_reflected").json()
    assert detail["render"]["kind"] == "elephants"
    assert detail["color_hint"]["kind"] == "parity4"
    assert len(detail["goals"]) == 4


def test_unknown_game_404(client):
    response = client.get("/games/nope")
    assert response.status_code == 404
    assert response.json()["code"] == "unknown_label"


def test_factorization_flow_to_win(client):
    created = client.post(
        "/sessions",
        json={"game": "linear5", "seed": 1, "u0": "JRBVO", "uf": "RJBVO"},
    )
    assert created.status_code == 201
    sid = created.json()["id"]
    state = client.get(f"/sessions/{sid}").json()
    assert state["configuration"] == "JRBVO"
    moved = client.post(f"/sessions/{sid}/moves", json={"generator": "s1"}).json()
    assert moved["status"] == "won"
    after = client.post(f"/sessions/{sid}/moves", json={"generator": "s1"})
    assert after.status_code == 409


def test_blind_session_hides_configuration(client):
    created = client.post(
        "/sessions",
        json={"game": "linear5", "seed": 3, "blind": True, "u0": "JRBVO", "uf": "RJBVO"},
    ).json()
    sid = created["id"]
    state = client.get(f"/sessions/{sid}").json()
    assert "configuration" not in state
    assert "configuration" not in created["state"]
    events = client.get(f"/sessions/{sid}/events").json()
    assert "configuration" not in json.dumps(events)
    verdict = client.post(f"/sessions/{sid}/submit", json={"word": ["s1"]}).json()
    assert verdict["status"] == "won"


def test_combination_session_hides_target(client):
    created = client.post("/sessions", json={"game": "safe", "seed": 5}).json()
    state = client.get(f"/sessions/{created['id']}").json()
    assert "target" not in state
    assert "configuration" in state  # live combination play shows the board


def test_impossible_declaration_and_409_after(client):
    created = client.post(
        "/sessions",
        json={"game": "even", "seed": 1, "u0": "JRBVOMC", "uf": "JRBVOMC"},
    ).json()
    sid = created["id"]
    out = client.post(f"/sessions/{sid}/impossible").json()
    assert out["status"] == "lost", "declaring on a solvable instance loses"
    again = client.post(f"/sessions/{sid}/impossible")
    assert again.status_code == 409


def test_undo_endpoint(client):
    created = client.post(
        "/sessions", json={"game": "lock", "seed": 2, "u0": "000", "uf": "555"}
    ).json()
    sid = created["id"]
    client.post(f"/sessions/{sid}/moves", json={"generator": "w1+"})
    state = client.post(f"/sessions/{sid}/undo").json()
    assert state["configuration"] == "000"


def test_inapplicable_move_is_400(client):
    created = client.post(
        "/sessions", json={"game": "taquin3", "seed": 1, "u0": "12345678_", "uf": "1234567_8"}
    ).json()
    sid = created["id"]
    bad = client.post(f"/sessions/{sid}/moves", json={"generator": "11>12"})
    assert bad.status_code == 400
    assert bad.json()["code"] == "inapplicable_move"


def test_choice_session_exposes_goals(client):
    created = client.post("/sessions", json={"game": "elephants_reflected", "seed": 4}).json()
    state = created["state"]
    assert len(state["goals"]) == 4


def test_pair_session_mirrors(client):
    created = client.post(
        "/sessions",
        json={
            "pair": {
                "left": {"game": "square_mirrors", "seed": 1, "u0": "PQRS", "uf": "SRQP"},
                "right": {"game": "two_lamps", "seed": 1, "u0": "oo", "uf": "**"},
                "mapping": {"mirV": "toggle", "mirD": "swap"},
            }
        },
    )
    assert created.status_code == 201
    sid = created.json()["id"]
    state = client.post(f"/sessions/{sid}/moves", json={"generator": "mirV"}).json()
    assert state["left"]["moves_played"] == 1
    assert state["right"]["moves_played"] == 1
    state = client.post(
        f"/sessions/{sid}/moves", json={"generator": "swap", "side": "right"}
    ).json()
    assert state["left"]["moves_played"] == 2


def test_blind_walk_never_leaks_configuration(client):
    """Walk a blind session through its whole pre-resolution lifecycle and
    grep every byte the API returned for configuration fields."""
    created = client.post(
        "/sessions", json={"game": "sheep", "seed": 6, "u0": "1,1,N"}
    )
    sid = created.json()["id"]
    payloads = [created.text]
    payloads.append(client.get(f"/sessions/{sid}").text)
    payloads.append(client.get(f"/sessions/{sid}/events").text)
    for text in payloads:
        assert "configuration" not in text
        assert "1,1,N" not in text


def test_persistence_roundtrip_random_logs(tmp_path):
    """store -> load -> replay equals the live session, for randomized logs."""
    rnd = random.Random(99)
    app = create_app(store_dir=str(tmp_path / "s"))
    with TestClient(app) as client:
        for trial in range(12):
            created = client.post(
                "/sessions", json={"game": "lock", "seed": trial}
            ).json()
            sid = created["id"]
            for _ in range(rnd.randrange(0, 12)):
                gen = rnd.choice(["w1+", "w1-", "w2+", "w2-", "w3+", "w3-"])
                if rnd.random() < 0.2:
                    client.post(f"/sessions/{sid}/undo")
                else:
                    client.post(f"/sessions/{sid}/moves", json={"generator": gen})
            live = client.get(f"/sessions/{sid}").json()
            # a fresh app over the same directory must reconstruct the session
            app2 = create_app(store_dir=str(tmp_path / "s"))
            with TestClient(app2) as client2:
                reloaded = client2.get(f"/sessions/{sid}").json()
                assert reloaded == live
