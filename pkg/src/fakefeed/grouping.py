"""Daily event clustering: shared URL, shared reply target, phrase distance.

The three link rules induce a relation whose transitive closure (computed
with union-find) partitions the batch into event clusters.  Everything is
keyed and ordered by tweet id so the partition is independent of input
order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping
from urllib.parse import parse_qsl, urlencode, urlsplit, urlunsplit

from .embeddings import EmbeddingTable, EmptyDistributionError, nbow
from .extraction import EventPhrase
from .ingest import DailyBatch
from .wmd import wcd_lower_bound, wmd

_TRACKING_PARAMS = ("utm_", "fbclid", "gclid", "igshid", "ref_src", "ref_url", "s", "t")


class PairBudgetExceeded(RuntimeError):
    """The all-pairs phrase comparison would exceed the configured cap."""


@dataclass(frozen=True)
class LinkEvidence:
    a: str
    b: str
    reason: str  # url | reply | wmd
    distance: float | None = None


@dataclass(frozen=True)
class EventCluster:
    cluster_id: str  # smallest member tweet id
    tweet_ids: tuple[str, ...]  # sorted
    phrases: Mapping[str, EventPhrase]
    link_evidence: tuple[LinkEvidence, ...]


class UnionFind:
    """Disjoint sets over hashable items with path compression."""

    def __init__(self):
        self.parent: dict = {}

    def find(self, item):
        if item not in self.parent:
            self.parent[item] = item
            return item
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # Smaller root wins to keep results independent of union order.
            lo, hi = (ra, rb) if ra < rb else (rb, ra)
            self.parent[hi] = lo

    def groups(self) -> list[list]:
        by_root: dict = {}
        for item in self.parent:
            by_root.setdefault(self.find(item), []).append(item)
        return [sorted(members) for _, members in sorted(by_root.items())]


def normalize_url(url: str) -> str:
    """Lowercase host, drop fragment and common tracking query parameters."""
    parts = urlsplit(url.strip())
    query = [
        (k, v)
        for k, v in parse_qsl(parts.query, keep_blank_values=True)
        if not k.startswith("utm_") and k not in _TRACKING_PARAMS
    ]
    return urlunsplit(
        (
            parts.scheme.lower(),
            parts.netloc.lower(),
            parts.path,
            urlencode(query),
            "",
        )
    )


def group_tweets(
    batch: DailyBatch,
    phrases: Mapping[str, EventPhrase],
    tau: float,
    table: EmbeddingTable | None,
    *,
    prefilter: bool = True,
    max_pairs: int | None = None,
) -> list[EventCluster]:
    """Partition the batch into event clusters.

    Links: (1) same normalized URL, (2) same reply or quote target,
    (3) phrase WMD strictly below *tau*.  Rule 3 needs *table*; with no
    table only rules 1 and 2 apply.
    """
    if tau <= 0:
        raise ValueError("tau must be positive")
    tweets = {t.id: t for t in batch.tweets}
    ids = sorted(tweets)

    uf = UnionFind()
    for tweet_id in ids:
        uf.find(tweet_id)
    evidence: list[LinkEvidence] = []

    by_url: dict[str, list[str]] = {}
    by_target: dict[str, list[str]] = {}
    for tweet_id in ids:
        tweet = tweets[tweet_id]
        for url in tweet.urls:
            by_url.setdefault(normalize_url(url), []).append(tweet_id)
        for target in (tweet.reply_to_id, tweet.quote_of_id):
            if target is not None:
                by_target.setdefault(target, []).append(tweet_id)

    for key in sorted(by_url):
        members = by_url[key]
        for a, b in zip(members, members[1:]):
            if a != b:
                uf.union(a, b)
                evidence.append(LinkEvidence(a, b, "url"))
    for key in sorted(by_target):
        members = by_target[key]
        for a, b in zip(members, members[1:]):
            if a != b:
                uf.union(a, b)
                evidence.append(LinkEvidence(a, b, "reply"))

    if table is not None:
        distributions = {}
        for tweet_id in ids:
            phrase = phrases.get(tweet_id)
            if phrase is None:
                continue
            try:
                distributions[tweet_id] = nbow(phrase.tokens or phrase.text.split(), table)
            except EmptyDistributionError:
                continue  # not WMD-linkable; rules 1-2 may still link it
        comparable = sorted(distributions)
        n_pairs = len(comparable) * (len(comparable) - 1) // 2
        if max_pairs is not None and n_pairs > max_pairs:
            raise PairBudgetExceeded(f"{n_pairs} phrase pairs exceed the cap of {max_pairs}")
        for a, b in combinations(comparable, 2):
            da, db = distributions[a], distributions[b]
            if prefilter and wcd_lower_bound(da, db, table) >= tau:
                continue
            distance = wmd(da, db, table)
            if distance < tau:
                uf.union(a, b)
                evidence.append(LinkEvidence(a, b, "wmd", distance))

    clusters = []
    for members in uf.groups():
        member_set = set(members)
        clusters.append(
            EventCluster(
                cluster_id=members[0],
                tweet_ids=tuple(members),
                phrases={tid: phrases[tid] for tid in members if tid in phrases},
                link_evidence=tuple(
                    ev for ev in evidence if ev.a in member_set and ev.b in member_set
                ),
            )
        )
    clusters.sort(key=lambda c: c.cluster_id)
    return clusters
