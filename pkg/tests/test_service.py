"""HTTP surface: request validation, response schemas, error mapping."""

import pytest
from fastapi.testclient import TestClient

from knightpaths.service.app import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_count_dp(client):
    response = client.post("/count", json={
        "class": "zigzag", "measure": "length", "value": 10, "height": 0,
    })
    assert response.status_code == 200
    body = response.json()
    assert body["count"] == "132"
    assert body["class"] == "zigzag"
    assert body["n"] == 10 and body["k"] == 0
    assert body["engines"] is None
    assert isinstance(body["count"], str)


def test_count_all_engines_agree(client):
    response = client.post("/count", json={
        "class": "zigzag", "measure": "size", "value": 13, "height": 2,
        "method": "all",
    })
    body = response.json()
    assert body["count"] == "65"
    assert body["agreement"] is True
    assert body["engines"] == {"dp": "65", "closed": "65", "brute": "65"}


def test_count_all_knight_skips_closed(client):
    response = client.post("/count", json={
        "class": "knight", "measure": "size", "value": 6, "height": 0,
        "method": "all",
    })
    body = response.json()
    assert body["count"] == "12"
    assert set(body["engines"]) == {"dp", "brute"}
    assert body["agreement"] is True


def test_count_closed_engine_for_knight_length_axis(client):
    response = client.post("/count", json={
        "class": "knight", "measure": "length", "value": 10, "height": 0,
        "method": "closed",
    })
    assert response.json()["count"] == "11293"


def test_count_closed_unavailable(client):
    response = client.post("/count", json={
        "class": "knight", "measure": "size", "value": 6, "height": 0,
        "method": "closed",
    })
    assert response.status_code == 400
    assert "closed form" in response.json()["detail"]


def test_count_validation_error(client):
    response = client.post("/count", json={
        "class": "zigzag", "measure": "length", "value": -1, "height": 0,
    })
    assert response.status_code == 422


def test_list_words_and_cap(client):
    response = client.post("/list", json={
        "class": "zigzag", "measure": "size", "value": 4, "height": 0,
    })
    assert response.json()["words"] == ["NnNn", "Ee"]

    response = client.post("/list", json={
        "class": "zigzag", "measure": "size", "value": 26, "height": 0,
    })
    assert response.status_code == 400
    assert "force" in response.json()["detail"]

    response = client.post("/list", json={
        "class": "zigzag", "measure": "size", "value": 26, "height": 0,
        "force": True,
    })
    assert response.status_code == 200
    from knightpaths.counting import count_partial
    from knightpaths.paths import Measure, PathClass

    assert response.json()["count"] == count_partial(
        PathClass.ZIGZAG, Measure.SIZE, 26, 0
    )


def test_series_endpoint(client):
    response = client.post("/series", json={"gf": "A", "order": 8})
    body = response.json()
    assert body["text"] == "1 + z^2 + 3*z^4 + 2*z^5 + 12*z^6 + 14*z^7 + 54*z^8"
    assert body["coefficients"] == ["1", "0", "1", "0", "3", "2", "12", "14", "54"]

    response = client.post("/series", json={"gf": "r-length", "order": 0})
    assert response.json()["text"] == "0"

    response = client.post("/series", json={"gf": "nope", "order": 5})
    assert response.status_code == 422


def test_map_endpoint(client):
    cases = [
        ("psi", "EeNnNeNnEn", "UFUFFDFD"),
        ("phi", "EeNnNeNnEn", "UUDUUDUDDUDD"),
        ("psi-inv", "F", ""),
        ("phi-inv", "UUDD", "Ee"),
    ]
    for bijection, word, image in cases:
        response = client.post("/map", json={"bijection": bijection, "word": word})
        assert response.status_code == 200
        assert response.json()["image"] == image


def test_map_domain_errors(client):
    response = client.post("/map", json={"bijection": "psi", "word": "N"})
    assert response.status_code == 400
    assert "x-axis" in response.json()["detail"]

    response = client.post("/map", json={"bijection": "psi-inv", "word": "UD"})
    assert response.status_code == 400
    assert "UD" in response.json()["detail"]

    response = client.post("/map", json={"bijection": "psi", "word": "Nx"})
    assert response.status_code == 400


def test_verify_endpoint(client):
    response = client.post("/verify", json={"suite": "closed", "max_value": 12})
    body = response.json()
    assert body["passed"] is True
    assert body["failures"] == 0
    assert all(check["passed"] for check in body["checks"])


def test_oeis_endpoint(client):
    response = client.post("/oeis", json={"id": "A004148", "max_terms": 11})
    body = response.json()
    assert body["outcome"] == "match"
    assert body["compared"] == 11
    assert body["source"] == "embedded"

    response = client.post("/oeis", json={"id": "A999999"})
    assert response.status_code == 400

    response = client.post("/oeis", json={"id": "bogus"})
    assert response.status_code == 422
