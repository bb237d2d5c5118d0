"""On-disk archive: daily cluster sets, votes, labels and dataset export.

Layout under the data directory::

    tweets/<lang>/<date>.jsonl   raw day batches (written by `crawl`)
    days/<lang>/<date>.json      ranked clusters (written by `archive`)
    votes.json                   all votes, keyed by cluster then voter

Day files are replaced atomically, so a concurrent reader sees either the
old or the new day, never a mix.  Votes live outside the day files and
survive re-archiving as long as cluster ids match.
"""
from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from datetime import date, datetime, timezone
from pathlib import Path
from typing import Iterator, Mapping, Sequence

from .grouping import LinkEvidence, normalize_url
from .extraction import EventPhrase
from .ingest import Tweet, format_rfc3339, parse_rfc3339, tweet_from_record, tweet_to_record
from .ranking import RankedCluster

VERDICTS = ("fake", "not_fake")
LABELS = ("fake", "not_fake", "unverified")

DEFAULT_MIN_VOTES = 5
DEFAULT_MAJORITY = 0.6


class ClusterNotFound(KeyError):
    pass


@dataclass(frozen=True)
class Vote:
    cluster_id: str
    voter_id: str
    verdict: str
    cast_at: datetime

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}, got {self.verdict!r}")


def derive_label(
    tally: Mapping[str, int],
    min_votes: int = DEFAULT_MIN_VOTES,
    majority: float = DEFAULT_MAJORITY,
) -> str:
    """fake / not_fake once enough votes agree, otherwise unverified."""
    fake = tally.get("fake", 0)
    not_fake = tally.get("not_fake", 0)
    total = fake + not_fake
    if total < min_votes or fake == not_fake:
        return "unverified"
    top_label, top_count = ("fake", fake) if fake > not_fake else ("not_fake", not_fake)
    if top_count / total >= majority:
        return top_label
    return "unverified"


def _phrase_to_json(phrase: EventPhrase) -> dict:
    return {
        "text": phrase.text,
        "token_indices": [list(pair) for pair in phrase.token_indices],
        "hop_count": phrase.hop_count,
        "tokens": list(phrase.tokens),
    }


def _phrase_from_json(tweet_id: str, data: dict) -> EventPhrase:
    return EventPhrase(
        tweet_id=tweet_id,
        text=data["text"],
        token_indices=tuple((s, i) for s, i in data["token_indices"]),
        hop_count=data["hop_count"],
        tokens=tuple(data["tokens"]),
    )


@dataclass(frozen=True)
class StoredCluster:
    date: date
    lang: str
    cluster_id: str
    position: int
    representative_tweet_id: str
    tweet_ids: tuple[str, ...]
    phrases: Mapping[str, EventPhrase]
    link_evidence: tuple[LinkEvidence, ...]
    tweets: Mapping[str, Tweet]

    @property
    def headline(self) -> str | None:
        """Representative's event phrase, else the first member phrase."""
        phrase = self.phrases.get(self.representative_tweet_id)
        if phrase is None:
            for tweet_id in self.tweet_ids:
                if tweet_id in self.phrases:
                    phrase = self.phrases[tweet_id]
                    break
        return phrase.text if phrase else None

    @property
    def representative(self) -> Tweet:
        return self.tweets[self.representative_tweet_id]

    def parts_pointed_out(self) -> list[dict]:
        """URL / quote / reply references carried by the debunking tweet."""
        rep = self.representative
        parts = [{"kind": "url", "value": url} for url in rep.urls]
        if rep.quote_of_id:
            parts.append({"kind": "quote", "value": rep.quote_of_id})
        if rep.reply_to_id:
            parts.append({"kind": "reply", "value": rep.reply_to_id})
        return parts


def generate_recrawl_queries(cluster: StoredCluster) -> list[str]:
    """Search queries for the recrawl: member URLs plus quoted phrases."""
    urls = sorted({normalize_url(u) for t in cluster.tweets.values() for u in t.urls})
    phrase_texts = sorted({p.text for p in cluster.phrases.values()})
    return [f"url:{u}" for u in urls] + [f'"{text}"' for text in phrase_texts]


class ClusterStore:
    """Embedded archive over a data directory; safe for threaded use."""

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        self._lock = threading.RLock()
        self._votes: dict[str, dict[str, dict]] = {}
        self._index: dict[str, tuple[str, str]] = {}  # cluster_id -> (lang, date)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._load_votes()
        self._build_index()

    # -- paths ---------------------------------------------------------

    def _day_path(self, day: date | str, lang: str) -> Path:
        return self.data_dir / "days" / lang / f"{day}.json"

    @property
    def _votes_path(self) -> Path:
        return self.data_dir / "votes.json"

    def _atomic_write(self, path: Path, payload: str) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(payload, encoding="utf-8")
        os.replace(tmp, path)

    # -- persistence ----------------------------------------------------

    def persist_batch(
        self,
        day: date,
        lang: str,
        ranked: Sequence[RankedCluster],
        tweets: Mapping[str, Tweet],
    ) -> None:
        """Idempotent upsert of one (date, lang); votes are untouched."""
        clusters_json = []
        for rc in ranked:
            cluster = rc.cluster
            clusters_json.append(
                {
                    "cluster_id": cluster.cluster_id,
                    "position": rc.position,
                    "representative_tweet_id": rc.representative_tweet_id,
                    "tweet_ids": list(cluster.tweet_ids),
                    "phrases": {tid: _phrase_to_json(p) for tid, p in sorted(cluster.phrases.items())},
                    "link_evidence": [
                        {"a": ev.a, "b": ev.b, "reason": ev.reason, "distance": ev.distance}
                        for ev in cluster.link_evidence
                    ],
                    "tweets": {tid: tweet_to_record(tweets[tid]) for tid in cluster.tweet_ids},
                }
            )
        document = {"date": str(day), "lang": lang, "clusters": clusters_json}
        payload = json.dumps(document, ensure_ascii=False, sort_keys=True, separators=(",", ":"))
        with self._lock:
            self._atomic_write(self._day_path(day, lang), payload)
            for item in clusters_json:
                self._index[item["cluster_id"]] = (lang, str(day))

    def _read_day(self, day: date | str, lang: str) -> list[StoredCluster]:
        path = self._day_path(day, lang)
        try:
            raw = path.read_bytes()
        except FileNotFoundError:
            return []
        document = json.loads(raw)
        clusters = []
        for item in document["clusters"]:
            tweets = {tid: tweet_from_record(rec) for tid, rec in item["tweets"].items()}
            clusters.append(
                StoredCluster(
                    date=date.fromisoformat(document["date"]),
                    lang=document["lang"],
                    cluster_id=item["cluster_id"],
                    position=item["position"],
                    representative_tweet_id=item["representative_tweet_id"],
                    tweet_ids=tuple(item["tweet_ids"]),
                    phrases={
                        tid: _phrase_from_json(tid, p) for tid, p in item["phrases"].items()
                    },
                    link_evidence=tuple(
                        LinkEvidence(ev["a"], ev["b"], ev["reason"], ev.get("distance"))
                        for ev in item["link_evidence"]
                    ),
                    tweets=tweets,
                )
            )
        clusters.sort(key=lambda c: c.position)
        return clusters

    def _build_index(self) -> None:
        days_dir = self.data_dir / "days"
        if not days_dir.is_dir():
            return
        for lang_dir in sorted(days_dir.iterdir()):
            if not lang_dir.is_dir():
                continue
            for day_file in sorted(lang_dir.glob("*.json")):
                try:
                    document = json.loads(day_file.read_bytes())
                except (OSError, json.JSONDecodeError):
                    continue
                for item in document.get("clusters", []):
                    self._index[item["cluster_id"]] = (document["lang"], document["date"])

    # -- reads ----------------------------------------------------------

    def get_top_clusters(self, day: date | str, lang: str, limit: int = 10) -> list[StoredCluster]:
        if limit < 1:
            raise ValueError("limit must be >= 1")
        return self._read_day(day, lang)[:limit]

    def get_cluster(self, cluster_id: str) -> StoredCluster:
        located = self._index.get(cluster_id)
        if located is None:
            raise ClusterNotFound(cluster_id)
        lang, day = located
        for cluster in self._read_day(day, lang):
            if cluster.cluster_id == cluster_id:
                return cluster
        raise ClusterNotFound(cluster_id)

    def list_days(self, lang: str) -> list[date]:
        lang_dir = self.data_dir / "days" / lang
        if not lang_dir.is_dir():
            return []
        return sorted(date.fromisoformat(p.stem) for p in lang_dir.glob("*.json"))

    # -- votes ----------------------------------------------------------

    def _load_votes(self) -> None:
        try:
            self._votes = json.loads(self._votes_path.read_bytes())
        except FileNotFoundError:
            self._votes = {}

    def _save_votes(self) -> None:
        payload = json.dumps(self._votes, ensure_ascii=False, sort_keys=True, separators=(",", ":"))
        self._atomic_write(self._votes_path, payload)

    def record_vote(self, vote: Vote) -> dict[str, int]:
        """Upsert by (cluster, voter); returns the recomputed tally."""
        with self._lock:
            if vote.cluster_id not in self._index:
                raise ClusterNotFound(vote.cluster_id)
            per_cluster = self._votes.setdefault(vote.cluster_id, {})
            per_cluster[vote.voter_id] = {
                "verdict": vote.verdict,
                "cast_at": format_rfc3339(vote.cast_at),
            }
            self._save_votes()
            return self.tally(vote.cluster_id)

    def tally(self, cluster_id: str) -> dict[str, int]:
        with self._lock:
            counts = {v: 0 for v in VERDICTS}
            for entry in self._votes.get(cluster_id, {}).values():
                counts[entry["verdict"]] += 1
            return counts

    def votes_for(self, cluster_id: str) -> list[Vote]:
        with self._lock:
            return [
                Vote(cluster_id, voter_id, entry["verdict"], parse_rfc3339(entry["cast_at"]))
                for voter_id, entry in sorted(self._votes.get(cluster_id, {}).items())
            ]

    # -- dataset export ---------------------------------------------------

    def export_dataset(
        self,
        from_day: date,
        to_day: date,
        lang: str,
        *,
        min_votes: int = DEFAULT_MIN_VOTES,
        majority: float = DEFAULT_MAJORITY,
    ) -> Iterator[dict]:
        """Dataset records for every cluster in the inclusive date range."""
        if from_day > to_day:
            raise ValueError("from_day must not be after to_day")
        for day in self.list_days(lang):
            if not from_day <= day <= to_day:
                continue
            for cluster in self._read_day(day, lang):
                tally = self.tally(cluster.cluster_id)
                yield {
                    "cluster_id": cluster.cluster_id,
                    "date": str(cluster.date),
                    "lang": cluster.lang,
                    "label": derive_label(tally, min_votes, majority),
                    "headline": cluster.headline,
                    "representative_tweet": tweet_to_record(cluster.representative),
                    "member_tweets": [
                        tweet_to_record(cluster.tweets[tid]) for tid in cluster.tweet_ids
                    ],
                    "recrawl_queries": generate_recrawl_queries(cluster),
                    "vote_tally": tally,
                }


def export_lines(records: Iterator[dict]) -> Iterator[str]:
    """Serialize dataset records as canonical JSON lines."""
    for record in records:
        yield json.dumps(record, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


_UTC = timezone.utc


def make_vote(cluster_id: str, voter_id: str, verdict: str, cast_at: datetime | None = None) -> Vote:
    return Vote(
        cluster_id=cluster_id,
        voter_id=voter_id,
        verdict=verdict,
        cast_at=cast_at if cast_at is not None else datetime.now(tz=_UTC),
    )
