"""Rule-based extraction of the suspicious event phrase from a debunking tweet.

Starting at the matched pattern tokens (the fake part), walk the dependency
tree: first look among the fake part's dependents for a preceding
subject/object-like phrase, then climb head links, and as a last resort hop
once to the next sentence (English) or the previous one (Japanese) and
search from its root.  Bare demonstrative pronouns are never returned.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .conllu import DependencyDocument, UdToken
from .patterns import MatchSpan

log = logging.getLogger(__name__)

DEFAULT_RELATIONS = frozenset({"nsubj", "nsubjpass", "dobj", "iobj", "csubj", "appos"})
DEFAULT_DEMONSTRATIVES: dict[str, frozenset[str]] = {
    "en": frozenset({"this", "that", "it", "these", "those"}),
    "ja": frozenset({"これ", "それ", "あれ", "こちら"}),
}
# Languages where the cross-sentence hop goes to the preceding sentence.
BACKWARD_HOP_LANGS = frozenset({"ja"})
# Languages whose surface text carries no spaces between tokens.
_NO_SPACE_LANGS = frozenset({"ja"})

_MAX_STEPS = 1000  # hard cap; the climb strictly decreases depth, so never hit


class SpanAlignmentError(ValueError):
    """A match span that overlaps no token of the document."""


@dataclass(frozen=True)
class ExtractionRules:
    relations: frozenset[str] = DEFAULT_RELATIONS
    demonstratives: dict[str, frozenset[str]] = field(
        default_factory=lambda: dict(DEFAULT_DEMONSTRATIVES)
    )


@dataclass(frozen=True)
class FakePart:
    sentence_index: int
    head_token: UdToken
    span_tokens: tuple[UdToken, ...]


@dataclass(frozen=True)
class EventPhrase:
    tweet_id: str
    text: str
    token_indices: tuple[tuple[int, int], ...]  # (sentence, token index) pairs
    hop_count: int  # 0 = found in the pattern's own sentence
    tokens: tuple[str, ...] = ()  # surface forms, in order (feeds the nBOW)


def _depth(sentence: tuple[UdToken, ...], token: UdToken) -> int:
    depth = 0
    node = token
    while node.head != 0 and depth <= len(sentence):
        node = sentence[node.head - 1]
        depth += 1
    return depth


def _children(sentence: tuple[UdToken, ...], token: UdToken) -> list[UdToken]:
    return [t for t in sentence if t.head == token.index]


def _subtree(sentence: tuple[UdToken, ...], token: UdToken) -> list[UdToken]:
    """Head-closure of *token*, in surface order."""
    collected = {token.index}
    stack = [token]
    while stack:
        node = stack.pop()
        for child in _children(sentence, node):
            if child.index not in collected:
                collected.add(child.index)
                stack.append(child)
    return [sentence[i - 1] for i in sorted(collected)]


def _find_sentence(doc: DependencyDocument, token: UdToken, sentence_index: int | None) -> int:
    if sentence_index is not None:
        return sentence_index
    for s_idx, sentence in enumerate(doc.sentences):
        for t in sentence:
            if t is token:
                return s_idx
    for s_idx, sentence in enumerate(doc.sentences):
        if token in sentence:
            return s_idx
    raise ValueError("token not found in document")


def subtree_yield(
    doc: DependencyDocument,
    token: UdToken,
    lang: str = "en",
    sentence_index: int | None = None,
) -> str:
    """Surface-order text of the token's subtree."""
    s_idx = _find_sentence(doc, token, sentence_index)
    separator = "" if lang in _NO_SPACE_LANGS else " "
    return separator.join(t.form for t in _subtree(doc.sentences[s_idx], token))


def locate_fake_part(doc: DependencyDocument, span: MatchSpan) -> FakePart:
    """Map a character span onto tree nodes.

    The head token is the span token whose head lies outside the span; with
    several, the one closest to the sentence root wins.
    """
    hits: list[tuple[int, UdToken]] = []
    for s_idx, sentence in enumerate(doc.sentences):
        for token in sentence:
            if token.char_start < span.end and span.start < token.char_end:
                hits.append((s_idx, token))
    if not hits:
        raise SpanAlignmentError(f"span {span.start}..{span.end} overlaps no token")

    s_idx = hits[0][0]
    sentence = doc.sentences[s_idx]
    span_tokens = tuple(t for s, t in hits if s == s_idx)
    span_indices = {t.index for t in span_tokens}

    outside = [t for t in span_tokens if t.head not in span_indices]
    if outside:
        head = min(outside, key=lambda t: (_depth(sentence, t), t.index))
    else:
        # Fragmented parse: fall back to the shallowest span token.
        head = min(span_tokens, key=lambda t: (_depth(sentence, t), t.index))
        log.warning("no span token heads outside the span; using %r", head.form)
    return FakePart(sentence_index=s_idx, head_token=head, span_tokens=span_tokens)


def _root(sentence: tuple[UdToken, ...]) -> UdToken:
    for token in sentence:
        if token.head == 0:
            return token
    raise ValueError("sentence has no root")


def _base_relation(deprel: str) -> str:
    return deprel.split(":", 1)[0]


def _is_bare_demonstrative(token: UdToken, lang: str, rules: ExtractionRules) -> bool:
    stoplist = rules.demonstratives.get(lang, frozenset())
    return token.upos == "PRON" and token.form.casefold() in stoplist


def _preceding_candidate(
    sentence: tuple[UdToken, ...],
    anchor: UdToken,
    lang: str,
    rules: ExtractionRules,
) -> UdToken | None:
    """Rule 2: closest preceding subject/object-like dependent of *anchor*."""
    candidates = []
    for token in _children(sentence, anchor):
        if _base_relation(token.deprel) not in rules.relations:
            continue
        if token.index >= anchor.index:
            continue
        if _is_bare_demonstrative(token, lang, rules):
            continue
        subtree_end = max(t.index for t in _subtree(sentence, token))
        candidates.append((subtree_end, token.index, token))
    if not candidates:
        return None
    return max(candidates)[2]


def extract_event_phrase(
    doc: DependencyDocument,
    fake: FakePart,
    lang: str,
    rules: ExtractionRules | None = None,
) -> EventPhrase | None:
    """Run the extraction cascade; None when no phrase qualifies."""
    rules = rules or ExtractionRules()
    s_idx = fake.sentence_index
    current = fake.head_token
    hops = 0

    for _ in range(_MAX_STEPS):
        sentence = doc.sentences[s_idx]
        candidate = _preceding_candidate(sentence, current, lang, rules)
        if candidate is not None:
            subtree = _subtree(sentence, candidate)
            separator = "" if lang in _NO_SPACE_LANGS else " "
            return EventPhrase(
                tweet_id=doc.tweet_id,
                text=separator.join(t.form for t in subtree),
                token_indices=tuple((s_idx, t.index) for t in subtree),
                hop_count=hops,
                tokens=tuple(t.form for t in subtree),
            )
        if current.head != 0:
            current = sentence[current.head - 1]  # rule 3: climb to the head
            continue
        if hops >= 1:
            return None
        target = s_idx - 1 if lang in BACKWARD_HOP_LANGS else s_idx + 1
        if not 0 <= target < len(doc.sentences):
            return None
        s_idx = target  # rule 4: one cross-sentence hop, restart at its root
        current = _root(doc.sentences[s_idx])
        hops = 1
    raise RuntimeError("extraction cascade failed to terminate")
