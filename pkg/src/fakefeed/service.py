"""HTTP/JSON API over the cluster archive, plus the static review client.

Every endpoint lives under /api/v1.  Query strings are strict: a request
carrying an unknown parameter is rejected so contract drift shows up in
tests instead of silently doing nothing.
"""
from __future__ import annotations

from datetime import date
from pathlib import Path
from typing import Literal

from fastapi import Depends, FastAPI, HTTPException, Query, Request
from fastapi.responses import StreamingResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .ingest import tweet_to_record
from .storage import (
    DEFAULT_MAJORITY,
    DEFAULT_MIN_VOTES,
    ClusterNotFound,
    ClusterStore,
    StoredCluster,
    derive_label,
    export_lines,
    make_vote,
)


class VoteBody(BaseModel):
    voter_id: str
    verdict: Literal["fake", "not_fake"]


def _strict_params(*allowed: str):
    def check(request: Request) -> None:
        unknown = set(request.query_params) - set(allowed)
        if unknown:
            raise HTTPException(
                status_code=400,
                detail=f"unknown query parameters: {', '.join(sorted(unknown))}",
            )

    return Depends(check)


def create_app(
    store: ClusterStore,
    *,
    static_dir: str | Path | None = None,
    min_votes: int = DEFAULT_MIN_VOTES,
    majority: float = DEFAULT_MAJORITY,
) -> FastAPI:
    app = FastAPI(title="fakefeed", version="0.1.0", docs_url=None, redoc_url=None)

    def cluster_view(cluster: StoredCluster) -> dict:
        tally = store.tally(cluster.cluster_id)
        return {
            "cluster_id": cluster.cluster_id,
            "date": str(cluster.date),
            "lang": cluster.lang,
            "position": cluster.position,
            "headline": cluster.headline,
            "debunking_tweet": tweet_to_record(cluster.representative),
            "parts_pointed_out": cluster.parts_pointed_out(),
            "tweet_count": len(cluster.tweet_ids),
            "tally": tally,
            "label": derive_label(tally, min_votes, majority),
        }

    @app.get("/api/v1/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/api/v1/clusters", dependencies=[_strict_params("date", "lang", "limit")])
    def top_clusters(
        date_: date = Query(alias="date"),
        lang: str = Query(),
        limit: int = Query(default=10, ge=1),
    ) -> dict:
        clusters = store.get_top_clusters(date_, lang, limit)
        return {
            "date": str(date_),
            "lang": lang,
            "clusters": [cluster_view(c) for c in clusters],
        }

    @app.get("/api/v1/clusters/{cluster_id}", dependencies=[_strict_params()])
    def one_cluster(cluster_id: str) -> dict:
        try:
            cluster = store.get_cluster(cluster_id)
        except ClusterNotFound:
            raise HTTPException(status_code=404, detail=f"unknown cluster {cluster_id!r}") from None
        return cluster_view(cluster)

    @app.post("/api/v1/clusters/{cluster_id}/votes", dependencies=[_strict_params()])
    def cast_vote(cluster_id: str, body: VoteBody) -> dict:
        try:
            tally = store.record_vote(make_vote(cluster_id, body.voter_id, body.verdict))
        except ClusterNotFound:
            raise HTTPException(status_code=404, detail=f"unknown cluster {cluster_id!r}") from None
        return {
            "cluster_id": cluster_id,
            "tally": tally,
            "label": derive_label(tally, min_votes, majority),
            "voter_verdict": body.verdict,
        }

    @app.get("/api/v1/export", dependencies=[_strict_params("from", "to", "lang")])
    def export(
        from_: date = Query(alias="from"),
        to: date = Query(),
        lang: str = Query(),
    ) -> StreamingResponse:
        if from_ > to:
            raise HTTPException(status_code=400, detail="'from' is after 'to'")
        records = store.export_dataset(from_, to, lang, min_votes=min_votes, majority=majority)

        def body():
            for line in export_lines(records):
                yield line + "\n"

        return StreamingResponse(body(), media_type="application/x-ndjson")

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")
    return app
