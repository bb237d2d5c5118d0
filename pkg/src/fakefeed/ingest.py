"""Tweet ingestion: pluggable sources, share-count filtering, daily batching.

Records arrive as line-delimited JSON with snake_case keys mirroring
:class:`Tweet` and RFC 3339 timestamps.  Loading never aborts on a bad
record: each one produces a diagnostic with its line number and processing
continues.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from datetime import date, datetime, timedelta, timezone
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

log = logging.getLogger(__name__)

SUPPORTED_LANGS = ("en", "ja")

# Canonical key order for serialized records.
_RECORD_FIELDS = (
    "id",
    "lang",
    "text",
    "created_at",
    "share_count",
    "like_count",
    "urls",
    "reply_to_id",
    "quote_of_id",
    "retweeter_count",
    "follower_retweeter_count",
    "author_verified",
)


class RecordError(ValueError):
    """A malformed tweet record."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message


@dataclass(frozen=True)
class Tweet:
    """One SNS post with metrics and relational links."""

    id: str
    lang: str
    text: str
    created_at: datetime
    share_count: int
    like_count: int
    urls: tuple[str, ...] = ()
    reply_to_id: str | None = None
    quote_of_id: str | None = None
    retweeter_count: int = 0
    follower_retweeter_count: int = 0
    author_verified: bool = False


@dataclass(frozen=True)
class DailyBatch:
    """All tweets of one language inside one local calendar day."""

    date: date
    lang: str
    tweets: tuple[Tweet, ...]


class FileTweetSource:
    """Line-delimited record file; the only shipped source implementation.

    Live crawling plugs in here: anything with a ``lines()`` method yielding
    ``(line_no, raw_line)`` pairs can be passed to :func:`load_tweets`.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def lines(self) -> Iterator[tuple[int, str]]:
        with self.path.open("r", encoding="utf-8") as fp:
            for line_no, line in enumerate(fp, start=1):
                yield line_no, line

    def __repr__(self) -> str:
        return f"FileTweetSource({str(self.path)!r})"


def parse_rfc3339(value: str) -> datetime:
    """Parse an RFC 3339 timestamp to an aware UTC datetime."""
    if not isinstance(value, str):
        raise ValueError(f"timestamp must be a string, got {type(value).__name__}")
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    try:
        parsed = datetime.fromisoformat(text)
    except ValueError:
        raise ValueError(f"bad RFC 3339 timestamp: {value!r}") from None
    if parsed.tzinfo is None:
        raise ValueError(f"timestamp lacks a UTC offset: {value!r}")
    return parsed.astimezone(timezone.utc)


def format_rfc3339(value: datetime) -> str:
    """Canonical RFC 3339 form: UTC, trailing Z."""
    utc = value.astimezone(timezone.utc)
    text = utc.isoformat()
    if text.endswith("+00:00"):
        text = text[:-6] + "Z"
    return text


def parse_utc_offset(value: str) -> timezone:
    """Parse a timezone offset like ``+09:00``, ``-05:30``, ``Z`` or ``UTC``."""
    text = value.strip()
    if text.upper() in ("Z", "UTC", "+00:00", "-00:00"):
        return timezone.utc
    if len(text) == 6 and text[0] in "+-" and text[3] == ":":
        try:
            hours, minutes = int(text[1:3]), int(text[4:6])
        except ValueError:
            raise ValueError(f"bad timezone offset: {value!r}") from None
        delta = timedelta(hours=hours, minutes=minutes)
        return timezone(-delta if text[0] == "-" else delta)
    raise ValueError(f"bad timezone offset: {value!r}")


def _require_count(record: dict, key: str) -> int:
    value = record[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{key} must be an integer")
    if value < 0:
        raise ValueError(f"{key} must be non-negative")
    return value


def tweet_from_record(record: dict, supported_langs: Sequence[str] = SUPPORTED_LANGS) -> Tweet:
    """Build a Tweet from a decoded record dict, enforcing type invariants."""
    if not isinstance(record, dict):
        raise ValueError("record is not an object")
    missing = [k for k in _RECORD_FIELDS if k not in record and k not in ("reply_to_id", "quote_of_id")]
    if missing:
        raise ValueError(f"missing fields: {', '.join(missing)}")

    tweet_id = record["id"]
    if not isinstance(tweet_id, str) or not tweet_id:
        raise ValueError("id must be a non-empty string")
    lang = record["lang"]
    if lang not in supported_langs:
        raise ValueError(f"unsupported lang {lang!r}")
    text = record["text"]
    if not isinstance(text, str):
        raise ValueError("text must be a string")

    share_count = _require_count(record, "share_count")
    like_count = _require_count(record, "like_count")
    retweeter_count = _require_count(record, "retweeter_count")
    follower_retweeter_count = _require_count(record, "follower_retweeter_count")
    if follower_retweeter_count > retweeter_count:
        raise ValueError(
            f"follower_retweeter_count {follower_retweeter_count} exceeds retweeter_count {retweeter_count}"
        )

    urls = record["urls"]
    if not isinstance(urls, list) or not all(isinstance(u, str) for u in urls):
        raise ValueError("urls must be a list of strings")

    for key in ("reply_to_id", "quote_of_id"):
        value = record.get(key)
        if value is not None and (not isinstance(value, str) or not value):
            raise ValueError(f"{key} must be a non-empty string or null")

    verified = record["author_verified"]
    if not isinstance(verified, bool):
        raise ValueError("author_verified must be a boolean")

    return Tweet(
        id=tweet_id,
        lang=lang,
        text=text,
        created_at=parse_rfc3339(record["created_at"]),
        share_count=share_count,
        like_count=like_count,
        urls=tuple(urls),
        reply_to_id=record.get("reply_to_id"),
        quote_of_id=record.get("quote_of_id"),
        retweeter_count=retweeter_count,
        follower_retweeter_count=follower_retweeter_count,
        author_verified=verified,
    )


def tweet_to_record(tweet: Tweet) -> dict:
    """Inverse of :func:`tweet_from_record`, with canonical field order."""
    return {
        "id": tweet.id,
        "lang": tweet.lang,
        "text": tweet.text,
        "created_at": format_rfc3339(tweet.created_at),
        "share_count": tweet.share_count,
        "like_count": tweet.like_count,
        "urls": list(tweet.urls),
        "reply_to_id": tweet.reply_to_id,
        "quote_of_id": tweet.quote_of_id,
        "retweeter_count": tweet.retweeter_count,
        "follower_retweeter_count": tweet.follower_retweeter_count,
        "author_verified": tweet.author_verified,
    }


def tweet_to_line(tweet: Tweet) -> str:
    return json.dumps(tweet_to_record(tweet), ensure_ascii=False, separators=(",", ":"))


def load_tweets(
    source: FileTweetSource | str | Path,
    *,
    supported_langs: Sequence[str] = SUPPORTED_LANGS,
    on_error: Callable[[RecordError], None] | None = None,
) -> list[Tweet]:
    """Load every well-formed record from *source*.

    Malformed records are reported through *on_error* (default: a warning on
    the module logger) and skipped.  Records repeating an already-seen tweet
    id are dropped, keeping the first occurrence; retweet records point at
    their source tweet id, so this collapses them onto the original.
    An unreadable source raises (fatal).
    """
    if isinstance(source, (str, Path)):
        source = FileTweetSource(source)
    report = on_error if on_error is not None else lambda err: log.warning("skipping record: %s", err)

    tweets: list[Tweet] = []
    seen: set[str] = set()
    for line_no, raw in source.lines():
        line = raw.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            report(RecordError(line_no, f"invalid JSON ({exc.msg})"))
            continue
        try:
            tweet = tweet_from_record(record, supported_langs)
        except ValueError as exc:
            report(RecordError(line_no, str(exc)))
            continue
        if tweet.id in seen:
            continue
        seen.add(tweet.id)
        tweets.append(tweet)
    return tweets


def filter_by_shares(tweets: Iterable[Tweet], min_exclusive: int = 3) -> list[Tweet]:
    """Keep tweets whose share count is strictly greater than *min_exclusive*."""
    if min_exclusive < 0:
        raise ValueError("min_exclusive must be >= 0")
    return [t for t in tweets if t.share_count > min_exclusive]


def partition_daily(tweets: Iterable[Tweet], tz: timezone = timezone.utc) -> list[DailyBatch]:
    """Split tweets into per-(local day, language) batches, sorted by date then lang."""
    buckets: dict[tuple[date, str], list[Tweet]] = {}
    for tweet in tweets:
        local_day = tweet.created_at.astimezone(tz).date()
        buckets.setdefault((local_day, tweet.lang), []).append(tweet)
    return [
        DailyBatch(date=day, lang=lang, tweets=tuple(batch))
        for (day, lang), batch in sorted(buckets.items())
    ]
