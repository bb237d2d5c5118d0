"""CoNLL-U ingestion: dependency trees plus character offsets into the tweet.

The parser itself is external; this module only consumes its output.
Multiword-token ranges and empty nodes are skipped.  Character offsets come
from a ``TokenRange=start:end`` annotation in the MISC column when present,
otherwise from greedy left-to-right alignment of token forms against the
raw tweet text (loud failure on any mismatch — no guessing).
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Mapping

_COLUMNS = 10
_TWEET_ID_PREFIX = "# tweet_id ="
_TEXT_PREFIX = "# text ="


class ConlluError(ValueError):
    """Malformed CoNLL-U input."""


@dataclass(frozen=True)
class UdToken:
    index: int  # 1-based within the sentence
    form: str
    upos: str
    head: int  # 0 = ROOT
    deprel: str
    char_start: int
    char_end: int


@dataclass(frozen=True)
class DependencyDocument:
    tweet_id: str
    sentences: tuple[tuple[UdToken, ...], ...]


@dataclass
class _RawSentence:
    start_line: int
    text: str | None
    tweet_id: str | None
    rows: list[tuple[int, list[str]]]  # (line_no, columns)


def _iter_raw_sentences(text: str) -> Iterator[_RawSentence]:
    sentence: _RawSentence | None = None
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.rstrip("\r\n")
        if not stripped.strip():
            if sentence is not None and sentence.rows:
                yield sentence
            sentence = None
            continue
        if sentence is None:
            sentence = _RawSentence(start_line=line_no, text=None, tweet_id=None, rows=[])
        if stripped.startswith("#"):
            if stripped.startswith(_TWEET_ID_PREFIX):
                sentence.tweet_id = stripped[len(_TWEET_ID_PREFIX):].strip()
            elif stripped.startswith(_TEXT_PREFIX):
                sentence.text = stripped[len(_TEXT_PREFIX):].strip()
            continue
        columns = stripped.split("\t")
        if len(columns) != _COLUMNS:
            raise ConlluError(f"line {line_no}: expected {_COLUMNS} tab-separated columns, got {len(columns)}")
        sentence.rows.append((line_no, columns))
    if sentence is not None and sentence.rows:
        yield sentence


def _token_range(misc: str) -> tuple[int, int] | None:
    for item in misc.split("|"):
        if item.startswith("TokenRange="):
            value = item[len("TokenRange="):]
            try:
                start_s, end_s = value.split(":")
                return int(start_s), int(end_s)
            except ValueError:
                raise ConlluError(f"bad TokenRange annotation: {item!r}") from None
    return None


def _check_tree(tokens: list[tuple[int, int, int]], sentence_no: int) -> None:
    """Validate head links (tokens: (line_no, index, head))."""
    n = len(tokens)
    heads = {index: head for _, index, head in tokens}
    roots = 0
    for line_no, index, head in tokens:
        if head == index:
            raise ConlluError(f"sentence {sentence_no}, line {line_no}: token is its own head")
        if not 0 <= head <= n:
            raise ConlluError(f"sentence {sentence_no}, line {line_no}: head {head} out of range 0..{n}")
        if head == 0:
            roots += 1
    if roots == 0:
        raise ConlluError(f"sentence {sentence_no}: no root token")
    if roots > 1:
        raise ConlluError(f"sentence {sentence_no}: {roots} root tokens")
    for line_no, index, _ in tokens:
        seen = set()
        node = index
        while node != 0:
            if node in seen:
                raise ConlluError(f"sentence {sentence_no}, line {line_no}: head cycle involving token {index}")
            seen.add(node)
            node = heads[node]


def parse_conllu(text: str, tweet_id: str, raw_text: str | None = None) -> DependencyDocument:
    """Parse one tweet's CoNLL-U block into a dependency document."""
    parsed_sentences: list[list[dict]] = []
    sentence_texts: list[str] = []

    for sentence_no, raw in enumerate(_iter_raw_sentences(text), start=1):
        tokens: list[dict] = []
        expected = 1
        for line_no, cols in raw.rows:
            token_id = cols[0]
            if "-" in token_id or "." in token_id:
                continue  # multiword range / empty node
            try:
                index = int(token_id)
            except ValueError:
                raise ConlluError(f"sentence {sentence_no}, line {line_no}: bad token id {token_id!r}") from None
            if index != expected:
                raise ConlluError(f"sentence {sentence_no}, line {line_no}: token id {index}, expected {expected}")
            expected += 1
            try:
                head = int(cols[6])
            except ValueError:
                raise ConlluError(
                    f"sentence {sentence_no}, line {line_no}: non-integer head {cols[6]!r}"
                ) from None
            tokens.append(
                {
                    "line_no": line_no,
                    "index": index,
                    "form": cols[1],
                    "upos": cols[3],
                    "head": head,
                    "deprel": cols[7],
                    "range": _token_range(cols[9]),
                }
            )
        if not tokens:
            continue
        _check_tree([(t["line_no"], t["index"], t["head"]) for t in tokens], sentence_no)
        parsed_sentences.append(tokens)
        sentence_texts.append(raw.text if raw.text is not None else " ".join(t["form"] for t in tokens))

    # Resolve character offsets.
    need_alignment = any(t["range"] is None for sent in parsed_sentences for t in sent)
    if need_alignment and parsed_sentences:
        raw = raw_text if raw_text is not None else " ".join(sentence_texts)
        cursor = 0
        for sent in parsed_sentences:
            for token in sent:
                if token["range"] is not None:
                    start, end = token["range"]
                    if raw_text is not None and raw_text[start:end] != token["form"]:
                        raise ConlluError(
                            f"TokenRange {start}:{end} does not cover form {token['form']!r}"
                        )
                    cursor = max(cursor, end)
                    continue
                at = raw.find(token["form"], cursor)
                if at == -1 or raw[cursor:at].strip():
                    raise ConlluError(
                        f"cannot align token {token['form']!r} against raw text at offset {cursor}"
                    )
                token["range"] = (at, at + len(token["form"]))
                cursor = at + len(token["form"])

    sentences = tuple(
        tuple(
            UdToken(
                index=t["index"],
                form=t["form"],
                upos=t["upos"],
                head=t["head"],
                deprel=t["deprel"],
                char_start=t["range"][0],
                char_end=t["range"][1],
            )
            for t in sent
        )
        for sent in parsed_sentences
    )
    return DependencyDocument(tweet_id=tweet_id, sentences=sentences)


def to_conllu(doc: DependencyDocument) -> str:
    """Serialize with TokenRange annotations so a re-parse is lossless."""
    lines: list[str] = []
    for sentence in doc.sentences:
        lines.append(f"{_TWEET_ID_PREFIX} {doc.tweet_id}")
        for token in sentence:
            misc = f"TokenRange={token.char_start}:{token.char_end}"
            lines.append(
                "\t".join(
                    [
                        str(token.index),
                        token.form,
                        "_",
                        token.upos,
                        "_",
                        "_",
                        str(token.head),
                        token.deprel,
                        "_",
                        misc,
                    ]
                )
            )
        lines.append("")
    return "\n".join(lines)


def validate_tree(doc: DependencyDocument) -> list[str]:
    """Diagnostics for every violated invariant; empty list when sound."""
    diagnostics: list[str] = []
    for s_idx, sentence in enumerate(doc.sentences):
        n = len(sentence)
        roots = [t for t in sentence if t.head == 0]
        if len(roots) != 1:
            diagnostics.append(f"sentence {s_idx + 1}: {len(roots)} roots")
        heads = {t.index: t.head for t in sentence}
        for token in sentence:
            if token.head == token.index:
                diagnostics.append(f"sentence {s_idx + 1}, token {token.index}: self-headed")
            elif not 0 <= token.head <= n:
                diagnostics.append(f"sentence {s_idx + 1}, token {token.index}: head {token.head} out of range")
            if token.char_start >= token.char_end:
                diagnostics.append(f"sentence {s_idx + 1}, token {token.index}: empty character range")
        for token in sentence:
            seen: set[int] = set()
            node = token.index
            while node != 0:
                if node in seen:
                    diagnostics.append(f"sentence {s_idx + 1}, token {token.index}: head cycle")
                    break
                seen.add(node)
                node = heads.get(node, 0)
                if node != 0 and not 0 <= node <= n:
                    break
    return diagnostics


def load_parse_file(
    source: str | Path,
    raw_texts: Mapping[str, str] | None = None,
) -> dict[str, DependencyDocument]:
    """Read a sidecar file of parses keyed by ``# tweet_id =`` comments.

    Consecutive sentences without a new tweet_id comment belong to the
    current tweet.  *raw_texts* supplies tweet text for offset alignment.
    """
    text = Path(source).read_text(encoding="utf-8")
    blocks: dict[str, list[str]] = {}
    order: list[str] = []
    current: str | None = None

    chunk: list[str] = []
    chunk_id: str | None = None
    for line in text.splitlines():
        if not line.strip():
            if chunk:
                key = chunk_id if chunk_id is not None else current
                if key is None:
                    raise ConlluError("sentence block without a tweet_id comment")
                if key not in blocks:
                    blocks[key] = []
                    order.append(key)
                blocks[key].extend(chunk + [""])
                current = key
            chunk = []
            chunk_id = None
            continue
        if line.startswith(_TWEET_ID_PREFIX):
            chunk_id = line[len(_TWEET_ID_PREFIX):].strip()
        chunk.append(line)
    if chunk:
        key = chunk_id if chunk_id is not None else current
        if key is None:
            raise ConlluError("sentence block without a tweet_id comment")
        if key not in blocks:
            blocks[key] = []
            order.append(key)
        blocks[key].extend(chunk + [""])

    documents: dict[str, DependencyDocument] = {}
    for tweet_id in order:
        raw = raw_texts.get(tweet_id) if raw_texts is not None else None
        documents[tweet_id] = parse_conllu("\n".join(blocks[tweet_id]), tweet_id, raw_text=raw)
    return documents
