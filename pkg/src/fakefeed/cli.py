"""Command-line entry points: crawl, archive, serve, export, eval-kappa."""
from __future__ import annotations

import argparse
import logging
import sys
from datetime import date
from pathlib import Path

from .agreement import cohen_kappa
from .config import AppConfig, load_config
from .conllu import load_parse_file
from .embeddings import load_embeddings
from .ingest import (
    DailyBatch,
    RecordError,
    load_tweets,
    parse_utc_offset,
    partition_daily,
    tweet_to_line,
)
from .pipeline import archive_day
from .rules import load_rules_config
from .storage import ClusterStore, export_lines

log = logging.getLogger("fakefeed")


def _tweets_path(data_dir: Path, lang: str, day: date | str) -> Path:
    return data_dir / "tweets" / lang / f"{day}.jsonl"


def cmd_crawl(args: argparse.Namespace, config: AppConfig) -> int:
    errors: list[RecordError] = []
    tweets = load_tweets(args.source, on_error=errors.append)
    for err in errors:
        print(f"crawl: skipped record at {err}", file=sys.stderr)
    batches = partition_daily(tweets, config.tz)
    for batch in batches:
        path = _tweets_path(config.data_dir, batch.lang, batch.date)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8") as fp:
            for tweet in batch.tweets:
                fp.write(tweet_to_line(tweet) + "\n")
        print(f"crawl: {batch.date} {batch.lang}: {len(batch.tweets)} tweets -> {path}")
    print(f"crawl: {len(tweets)} tweets in {len(batches)} day batches, {len(errors)} records skipped")
    return 0


def cmd_archive(args: argparse.Namespace, config: AppConfig) -> int:
    day = date.fromisoformat(args.date)
    lang = args.lang
    tweets_file = _tweets_path(config.data_dir, lang, day)
    if not tweets_file.is_file():
        print(f"archive: no tweets stored for {day} {lang} (expected {tweets_file})", file=sys.stderr)
        return 1
    tweets = load_tweets(tweets_file)
    batch = DailyBatch(date=day, lang=lang, tweets=tuple(tweets))

    rules = load_rules_config(args.patterns if args.patterns else config.rules_path)

    embeddings_path = Path(args.embeddings) if args.embeddings else config.embeddings.get(lang)
    table = load_embeddings(embeddings_path) if embeddings_path else None
    if table is None:
        log.warning("no embeddings for %s: grouping uses URL and reply links only", lang)

    parses = {}
    if args.parses:
        parses = load_parse_file(args.parses, raw_texts={t.id: t.text for t in tweets})

    result = archive_day(
        batch,
        parses,
        rules,
        table,
        tau=config.tau,
        min_shares=config.min_shares,
        max_pairs=args.max_pairs,
    )
    store = ClusterStore(config.data_dir)
    store.persist_batch(day, lang, result.ranked, result.tweets)
    print(
        f"archive: {day} {lang}: {len(batch.tweets)} tweets, "
        f"{len(result.batch.tweets)} past share filter, "
        f"{len(result.phrases)} phrases, {len(result.ranked)} clusters"
    )
    return 0


def cmd_serve(args: argparse.Namespace, config: AppConfig) -> int:
    import uvicorn

    from .service import create_app

    store = ClusterStore(config.data_dir)
    app = create_app(
        store,
        static_dir=config.static_dir,
        min_votes=config.min_votes,
        majority=config.majority,
    )
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


def cmd_export(args: argparse.Namespace, config: AppConfig) -> int:
    store = ClusterStore(config.data_dir)
    records = store.export_dataset(
        date.fromisoformat(args.from_date),
        date.fromisoformat(args.to_date),
        args.lang,
        min_votes=config.min_votes,
        majority=config.majority,
    )
    out = Path(args.output).open("w", encoding="utf-8") if args.output else sys.stdout
    try:
        count = 0
        for line in export_lines(records):
            out.write(line + "\n")
            count += 1
    finally:
        if args.output:
            out.close()
    print(f"export: {count} records", file=sys.stderr)
    return 0


def cmd_eval_kappa(args: argparse.Namespace, config: AppConfig) -> int:
    labels = []
    for path in (args.labels_a, args.labels_b):
        lines = [ln.strip() for ln in Path(path).read_text(encoding="utf-8").splitlines()]
        labels.append([ln for ln in lines if ln])
    kappa = cohen_kappa(labels[0], labels[1])
    print(f"{kappa:.4f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fakefeed", description="Fake-news event collection pipeline")
    parser.add_argument("--config", help="JSON configuration file")
    sub = parser.add_subparsers(dest="command", required=True)

    crawl = sub.add_parser("crawl", help="load a tweet source into per-day batches")
    crawl.add_argument("--source", required=True, help="line-delimited tweet record file")
    crawl.add_argument("--data-dir")
    crawl.add_argument("--timezone", help="day-boundary offset, e.g. +09:00")
    crawl.set_defaults(func=cmd_crawl)

    archive = sub.add_parser("archive", help="cluster and rank one stored day")
    archive.add_argument("--date", required=True, help="YYYY-MM-DD")
    archive.add_argument("--lang", required=True)
    archive.add_argument("--tau", type=float)
    archive.add_argument("--embeddings", help="word-vector file for this language")
    archive.add_argument("--patterns", help="rules configuration file")
    archive.add_argument("--parses", help="CoNLL-U sidecar file keyed by tweet_id")
    archive.add_argument("--min-shares", type=int, dest="min_shares")
    archive.add_argument("--max-pairs", type=int, dest="max_pairs")
    archive.add_argument("--data-dir")
    archive.set_defaults(func=cmd_archive)

    serve = sub.add_parser("serve", help="serve the archive over HTTP")
    serve.add_argument("--port", type=int)
    serve.add_argument("--host")
    serve.add_argument("--data-dir")
    serve.add_argument("--static-dir", help="directory with the review client")
    serve.set_defaults(func=cmd_serve)

    export = sub.add_parser("export", help="write the vote-labeled dataset")
    export.add_argument("--from", dest="from_date", required=True)
    export.add_argument("--to", dest="to_date", required=True)
    export.add_argument("--lang", required=True)
    export.add_argument("--output", "-o")
    export.add_argument("--data-dir")
    export.set_defaults(func=cmd_export)

    kappa = sub.add_parser("eval-kappa", help="Cohen's kappa of two label files")
    kappa.add_argument("labels_a")
    kappa.add_argument("labels_b")
    kappa.set_defaults(func=cmd_eval_kappa)
    return parser


def _apply_overrides(args: argparse.Namespace, config: AppConfig) -> None:
    if getattr(args, "data_dir", None):
        config.data_dir = Path(args.data_dir)
    if getattr(args, "timezone", None):
        config.tz = parse_utc_offset(args.timezone)
    if getattr(args, "tau", None) is not None:
        config.tau = args.tau
    if getattr(args, "min_shares", None) is not None:
        config.min_shares = args.min_shares
    if getattr(args, "port", None) is not None:
        config.port = args.port
    if getattr(args, "host", None):
        config.host = args.host
    if getattr(args, "static_dir", None):
        config.static_dir = Path(args.static_dir)


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    config = load_config(args.config)
    _apply_overrides(args, config)
    return args.func(args, config)


if __name__ == "__main__":
    sys.exit(main())
