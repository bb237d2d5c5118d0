"""Daily archive pipeline: pattern match, phrase extraction, grouping, ranking."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping

from .conllu import DependencyDocument
from .embeddings import EmbeddingTable
from .extraction import EventPhrase, SpanAlignmentError, extract_event_phrase, locate_fake_part
from .grouping import group_tweets
from .ingest import DailyBatch, Tweet, filter_by_shares
from .patterns import CompiledPattern, MatchSpan, match_text
from .ranking import RankedCluster, rank_clusters
from .rules import RuleConfig

log = logging.getLogger(__name__)

DEFAULT_TAU = 0.25
DEFAULT_MIN_SHARES = 3


@dataclass
class DayResult:
    batch: DailyBatch
    phrases: dict[str, EventPhrase]
    ranked: list[RankedCluster]
    tweets: dict[str, Tweet] = field(default_factory=dict)

    def __post_init__(self):
        if not self.tweets:
            self.tweets = {t.id: t for t in self.batch.tweets}


def first_match(compiled: list[CompiledPattern], text: str) -> MatchSpan | None:
    """Leftmost match over all patterns; ties go to the longer span."""
    best: MatchSpan | None = None
    for pattern in compiled:
        for span in match_text(pattern, text):
            if best is None or (span.start, -span.end) < (best.start, -best.end):
                best = span
            break  # spans are sorted; only the first can improve
    return best


def extract_phrases(
    tweets: list[Tweet],
    parses: Mapping[str, DependencyDocument],
    compiled: list[CompiledPattern],
    rules: RuleConfig,
) -> dict[str, EventPhrase]:
    phrases: dict[str, EventPhrase] = {}
    for tweet in tweets:
        span = first_match(compiled, tweet.text)
        if span is None:
            continue
        doc = parses.get(tweet.id)
        if doc is None or not doc.sentences:
            continue
        try:
            fake = locate_fake_part(doc, span)
        except SpanAlignmentError as exc:
            log.warning("tweet %s: %s", tweet.id, exc)
            continue
        phrase = extract_event_phrase(doc, fake, tweet.lang, rules.extraction)
        if phrase is not None:
            phrases[tweet.id] = phrase
    return phrases


def archive_day(
    batch: DailyBatch,
    parses: Mapping[str, DependencyDocument],
    rules: RuleConfig,
    table: EmbeddingTable | None,
    *,
    tau: float = DEFAULT_TAU,
    min_shares: int = DEFAULT_MIN_SHARES,
    max_pairs: int | None = None,
) -> DayResult:
    """Run the full archiving sequence on one daily batch."""
    kept = filter_by_shares(batch.tweets, min_shares)
    filtered = DailyBatch(date=batch.date, lang=batch.lang, tweets=tuple(kept))
    compiled = rules.compiled(batch.lang)
    phrases = extract_phrases(kept, parses, compiled, rules)
    clusters = group_tweets(filtered, phrases, tau, table, max_pairs=max_pairs)
    ranked = rank_clusters(clusters, {t.id: t for t in kept})
    return DayResult(batch=filtered, phrases=phrases, ranked=ranked)
