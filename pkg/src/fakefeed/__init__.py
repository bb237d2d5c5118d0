"""fakefeed: multilingual fake-news event collection from debunking tweets."""

from .agreement import cohen_kappa
from .conllu import DependencyDocument, UdToken, parse_conllu, to_conllu, validate_tree
from .embeddings import EmbeddingTable, NBow, load_embeddings, nbow
from .extraction import (
    EventPhrase,
    ExtractionRules,
    FakePart,
    extract_event_phrase,
    locate_fake_part,
    subtree_yield,
)
from .grouping import EventCluster, LinkEvidence, group_tweets, normalize_url
from .ingest import (
    DailyBatch,
    Tweet,
    filter_by_shares,
    load_tweets,
    partition_daily,
)
from .patterns import (
    CompiledPattern,
    MatchSpan,
    PatternSpec,
    compile_pattern,
    expand_alternations,
    match_text,
)
from .pipeline import archive_day
from .ranking import FeatureRanks, RankedCluster, public_score, rank_clusters, rank_tweets
from .rules import RuleConfig, load_rules_config
from .storage import ClusterStore, Vote, derive_label, generate_recrawl_queries
from .transport import TransportPlan, solve_transport
from .wmd import wcd_lower_bound, wmd

__version__ = "0.1.0"

__all__ = [
    "ClusterStore",
    "CompiledPattern",
    "DailyBatch",
    "DependencyDocument",
    "EmbeddingTable",
    "EventCluster",
    "EventPhrase",
    "ExtractionRules",
    "FakePart",
    "FeatureRanks",
    "LinkEvidence",
    "MatchSpan",
    "NBow",
    "PatternSpec",
    "RankedCluster",
    "RuleConfig",
    "Tweet",
    "TransportPlan",
    "UdToken",
    "Vote",
    "archive_day",
    "cohen_kappa",
    "compile_pattern",
    "derive_label",
    "expand_alternations",
    "extract_event_phrase",
    "filter_by_shares",
    "generate_recrawl_queries",
    "group_tweets",
    "load_embeddings",
    "load_rules_config",
    "load_tweets",
    "locate_fake_part",
    "match_text",
    "nbow",
    "normalize_url",
    "parse_conllu",
    "partition_daily",
    "public_score",
    "rank_clusters",
    "rank_tweets",
    "solve_transport",
    "subtree_yield",
    "to_conllu",
    "validate_tree",
    "wcd_lower_bound",
    "wmd",
]
