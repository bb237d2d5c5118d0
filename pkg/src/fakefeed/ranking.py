"""Attention ranking: average dense rank over likes, retweets and public score.

Likes and retweets rank high-to-low; the public score (share of retweeters
already following the author) ranks low-to-high, because spread beyond the
follower circle signals wider attention.  Each cluster is represented by
its best-ranked member and clusters are ordered by their representatives.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .grouping import EventCluster
from .ingest import Tweet


@dataclass(frozen=True)
class FeatureRanks:
    tweet_id: str
    like_rank: int
    retweet_rank: int
    public_rank: int
    avg_rank: float


@dataclass(frozen=True)
class RankedCluster:
    cluster: EventCluster
    representative_tweet_id: str
    position: int


def public_score(tweet: Tweet) -> float:
    """Fraction of retweeters who follow the author; 1.0 with no retweeters."""
    if tweet.retweeter_count == 0:
        return 1.0
    return tweet.follower_retweeter_count / tweet.retweeter_count


def _dense_ranks(values: Iterable, descending: bool) -> dict:
    ordered = sorted(set(values), reverse=descending)
    return {value: rank for rank, value in enumerate(ordered, start=1)}


def rank_tweets(tweets: Sequence[Tweet]) -> list[FeatureRanks]:
    """Per-tweet feature ranks, sorted by average rank (ties by tweet id)."""
    if not tweets:
        raise ValueError("cannot rank an empty tweet list")
    like_rank = _dense_ranks((t.like_count for t in tweets), descending=True)
    retweet_rank = _dense_ranks((t.share_count for t in tweets), descending=True)
    public_rank = _dense_ranks((public_score(t) for t in tweets), descending=False)

    ranked = []
    for t in tweets:
        lr = like_rank[t.like_count]
        rr = retweet_rank[t.share_count]
        pr = public_rank[public_score(t)]
        ranked.append(
            FeatureRanks(
                tweet_id=t.id,
                like_rank=lr,
                retweet_rank=rr,
                public_rank=pr,
                avg_rank=(lr + rr + pr) / 3,
            )
        )
    ranked.sort(key=lambda r: (r.avg_rank, r.tweet_id))
    return ranked


def rank_clusters(
    clusters: Sequence[EventCluster],
    tweets: Mapping[str, Tweet],
) -> list[RankedCluster]:
    """Order clusters by their best-ranked member, positions 1..n."""
    if not clusters:
        return []
    member_ids = sorted({tid for c in clusters for tid in c.tweet_ids})
    ranks = {r.tweet_id: r for r in rank_tweets([tweets[tid] for tid in member_ids])}

    chosen = []
    for cluster in clusters:
        representative = min(cluster.tweet_ids, key=lambda tid: (ranks[tid].avg_rank, tid))
        chosen.append((ranks[representative].avg_rank, representative, cluster))
    chosen.sort(key=lambda item: (item[0], item[1]))
    return [
        RankedCluster(cluster=cluster, representative_tweet_id=rep, position=pos)
        for pos, (_, rep, cluster) in enumerate(chosen, start=1)
    ]
