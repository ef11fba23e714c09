import pytest
from fastapi.testclient import TestClient

from app.main import app
from app.routers import solve_router
from app.services.config import settings
from app.services.errors import InvariantViolation
from app.utils.graph_parser import write_graph

from conftest import bi_clique, clique_pair


@pytest.fixture
def client() -> TestClient:
    return TestClient(app)


def test_root_and_ping(client: TestClient) -> None:
    assert client.get("/").json()["status"] == "ok"
    ping = client.get("/health/ping").json()
    assert ping["status"] == "healthy"
    assert ping["service"] == "kconn"
    assert ping["version"]


def test_limits(client: TestClient, monkeypatch) -> None:
    monkeypatch.setattr(settings, "BASELINE_MAX_M", 123)
    body = client.get("/health/limits").json()
    assert body["baseline_max_m"] == 123
    assert set(body) == {"oracle_max_n", "baseline_max_m", "enumeration_max_n", "debug_checks"}


def test_solve_json_body(client: TestClient) -> None:
    response = client.post("/solve", json={"n": 4, "edges": bi_clique(range(4)), "mode": "2ecs"})
    assert response.status_code == 200
    body = response.json()
    assert body["components"] == [[0, 1, 2, 3]]
    assert body["stats"]["mode"] == "2ecs"


def test_solve_undirected_body(client: TestClient) -> None:
    payload = {"n": 4, "edges": [[0, 1], [1, 2], [2, 0], [2, 3]], "directed": False, "mode": "kecs-undirected"}
    response = client.post("/solve", json=payload)
    assert response.status_code == 200
    assert response.json()["components"] == [[0, 1, 2]]


def test_solve_baseline_body(client: TestClient) -> None:
    payload = {"n": 5, "edges": bi_clique([0, 1, 2]) + bi_clique([2, 3, 4]), "mode": "2vcs", "algorithm": "baseline"}
    body = client.post("/solve", json=payload).json()
    assert body["components"] == [[0, 1, 2], [2, 3, 4]]
    assert body["provenance"] == "oracle"


@pytest.mark.parametrize(
    "payload",
    [
        {"n": 2, "edges": [[0, 2]]},
        {"n": 2, "edges": [[0, 2]], "directed": False, "mode": "kecs-undirected"},
        {"n": 2, "edges": [[0, 1]], "mode": "kecs-undirected"},
    ],
)
def test_bad_graphs_are_400(client: TestClient, payload) -> None:
    assert client.post("/solve", json=payload).status_code == 400


def test_schema_violations_are_422(client: TestClient) -> None:
    assert client.post("/solve", json={"n": 2, "edges": [], "mode": "kecs", "k": 1}).status_code == 422
    assert client.post("/solve", json={"n": 2, "edges": [], "delta": 0}).status_code == 422


def test_upload(client: TestClient) -> None:
    files = {"file": ("clique-pair.txt", write_graph(clique_pair()), "text/plain")}
    response = client.post("/solve/upload", params={"mode": "kecs", "k": 3}, files=files)
    assert response.status_code == 200
    assert response.json()["components"] == [[0, 1, 2, 3], [4, 5, 6, 7]]


def test_upload_malformed(client: TestClient) -> None:
    files = {"file": ("bad.txt", "2 1 d\n0 x\n", "text/plain")}
    response = client.post("/solve/upload", files=files)
    assert response.status_code == 400
    assert "line 2" in response.json()["detail"]


def test_invariant_violation_is_500(client: TestClient, monkeypatch) -> None:
    def broken(*args, **kwargs):
        raise InvariantViolation("split changed the edge count")

    monkeypatch.setattr(solve_router, "solve", broken)
    response = client.post("/solve", json={"n": 2, "edges": [[0, 1], [1, 0]]})
    assert response.status_code == 500
