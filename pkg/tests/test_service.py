from __future__ import annotations

from datetime import date

import pytest
from fastapi.testclient import TestClient

from fakefeed.service import create_app
from fakefeed.storage import ClusterStore
from test_storage import build_day

DAY = date(2019, 12, 8)


@pytest.fixture
def client(tmp_path, make_tweet):
    store = ClusterStore(tmp_path)
    ranked, tweets = build_day(make_tweet, n_clusters=12)
    store.persist_batch(DAY, "en", ranked, tweets)
    app = create_app(store)
    with TestClient(app) as c:
        yield c


def test_health(client):
    response = client.get("/api/v1/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_default_limit_is_ten(client):
    body = client.get("/api/v1/clusters", params={"date": str(DAY), "lang": "en"}).json()
    assert len(body["clusters"]) == 10
    assert [c["position"] for c in body["clusters"]] == list(range(1, 11))


def test_explicit_limit(client):
    body = client.get(
        "/api/v1/clusters", params={"date": str(DAY), "lang": "en", "limit": 1}
    ).json()
    assert len(body["clusters"]) == 1
    assert body["clusters"][0]["position"] == 1


def test_unknown_day_is_empty_not_error(client):
    response = client.get("/api/v1/clusters", params={"date": "2030-01-01", "lang": "en"})
    assert response.status_code == 200
    assert response.json()["clusters"] == []
    response = client.get("/api/v1/clusters", params={"date": str(DAY), "lang": "ja"})
    assert response.json()["clusters"] == []


def test_unknown_query_parameter_rejected(client):
    response = client.get(
        "/api/v1/clusters", params={"date": str(DAY), "lang": "en", "sort": "likes"}
    )
    assert response.status_code == 400
    assert "sort" in response.json()["detail"]


def test_missing_required_parameters_rejected(client):
    assert client.get("/api/v1/clusters", params={"date": str(DAY)}).status_code == 422
    assert client.get("/api/v1/clusters", params={"lang": "en"}).status_code == 422
    assert client.get("/api/v1/clusters", params={"date": "not-a-date", "lang": "en"}).status_code == 422


def test_cluster_view_carries_presentation_parts(client):
    body = client.get("/api/v1/clusters", params={"date": str(DAY), "lang": "en"}).json()
    view = body["clusters"][0]
    assert view["headline"] == "story 0"
    assert view["debunking_tweet"]["text"] == "story 0 is fake!"
    assert {"kind": "url", "value": "http://news.example/0"} in view["parts_pointed_out"]
    assert view["tally"] == {"fake": 0, "not_fake": 0}
    assert view["label"] == "unverified"


def test_single_cluster_endpoint(client):
    view = client.get("/api/v1/clusters/c00m0").json()
    assert view["cluster_id"] == "c00m0"
    assert client.get("/api/v1/clusters/ghost").status_code == 404


def test_vote_flow_with_overwrite(client):
    first = client.post(
        "/api/v1/clusters/c00m0/votes", json={"voter_id": "alice", "verdict": "fake"}
    )
    assert first.status_code == 200
    assert first.json()["tally"] == {"fake": 1, "not_fake": 0}

    switched = client.post(
        "/api/v1/clusters/c00m0/votes", json={"voter_id": "alice", "verdict": "not_fake"}
    )
    assert switched.json()["tally"] == {"fake": 0, "not_fake": 1}

    other = client.post(
        "/api/v1/clusters/c00m0/votes", json={"voter_id": "bob", "verdict": "fake"}
    )
    assert other.json()["tally"] == {"fake": 1, "not_fake": 1}


def test_vote_validation_and_unknown_cluster(client):
    assert (
        client.post("/api/v1/clusters/ghost/votes", json={"voter_id": "a", "verdict": "fake"}).status_code
        == 404
    )
    assert (
        client.post(
            "/api/v1/clusters/c00m0/votes", json={"voter_id": "a", "verdict": "maybe"}
        ).status_code
        == 422
    )
    assert client.post("/api/v1/clusters/c00m0/votes", json={"verdict": "fake"}).status_code == 422


def test_export_endpoint_deterministic_ndjson(client):
    params = {"from": str(DAY), "to": str(DAY), "lang": "en"}
    first = client.get("/api/v1/export", params=params)
    assert first.status_code == 200
    assert first.headers["content-type"].startswith("application/x-ndjson")
    lines = [ln for ln in first.text.splitlines() if ln]
    assert len(lines) == 12

    second = client.get("/api/v1/export", params=params)
    assert second.content == first.content

    reversed_range = client.get(
        "/api/v1/export", params={"from": "2020-01-02", "to": "2020-01-01", "lang": "en"}
    )
    assert reversed_range.status_code == 400


def test_votes_reflected_in_export(client):
    for voter in "abcde":
        client.post("/api/v1/clusters/c00m0/votes", json={"voter_id": voter, "verdict": "fake"})
    text = client.get(
        "/api/v1/export", params={"from": str(DAY), "to": str(DAY), "lang": "en"}
    ).text
    import json

    first = json.loads(text.splitlines()[0])
    assert first["cluster_id"] == "c00m0"
    assert first["label"] == "fake"
    assert first["vote_tally"] == {"fake": 5, "not_fake": 0}
