"""Application configuration: one JSON file supplies defaults for all CLI flags."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import timezone
from pathlib import Path

from .ingest import parse_utc_offset
from .pipeline import DEFAULT_MIN_SHARES, DEFAULT_TAU
from .storage import DEFAULT_MAJORITY, DEFAULT_MIN_VOTES


@dataclass
class AppConfig:
    data_dir: Path = Path("data")
    tz: timezone = timezone.utc
    min_shares: int = DEFAULT_MIN_SHARES
    tau: float = DEFAULT_TAU
    rules_path: Path | None = None  # None = packaged defaults
    embeddings: dict[str, Path] = field(default_factory=dict)
    min_votes: int = DEFAULT_MIN_VOTES
    majority: float = DEFAULT_MAJORITY
    host: str = "127.0.0.1"
    port: int = 8080
    static_dir: Path | None = None


def load_config(path: str | Path | None) -> AppConfig:
    config = AppConfig()
    if path is None:
        return config
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if "data_dir" in data:
        config.data_dir = Path(data["data_dir"])
    if "timezone" in data:
        config.tz = parse_utc_offset(data["timezone"])
    if "min_shares" in data:
        config.min_shares = int(data["min_shares"])
    if "tau" in data:
        config.tau = float(data["tau"])
    if "rules" in data:
        config.rules_path = Path(data["rules"])
    for lang, p in data.get("embeddings", {}).items():
        config.embeddings[lang] = Path(p)
    votes = data.get("votes", {})
    if "min_votes" in votes:
        config.min_votes = int(votes["min_votes"])
    if "majority" in votes:
        config.majority = float(votes["majority"])
    if "host" in data:
        config.host = str(data["host"])
    if "port" in data:
        config.port = int(data["port"])
    if "static_dir" in data:
        config.static_dir = Path(data["static_dir"])
    return config
