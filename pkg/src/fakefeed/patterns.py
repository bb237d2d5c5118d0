"""Debunking-pattern mini-language: compile specs and locate matches in text.

The language has literals, parenthesized alternation ``(a|b)`` and
parenthesized optional groups ``(x)`` (a group with no ``|``).  Groups do
not nest.  Matching is case-insensitive, whitespace in a pattern matches
any whitespace run, and for languages written with spaces a match may not
glue a word character of the pattern onto a word character of the
surrounding text.  Unsegmented scripts (Japanese) match as plain
substrings.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

# Languages whose script has no word boundaries to respect.
UNSEGMENTED_LANGS = frozenset({"ja"})

# At a match edge, forbid word-char-to-word-char adhesion.  Works at both
# edges: lookbehind sees the last char before the position, lookahead the
# next one.
_EDGE_GUARD = r"(?!(?<=\w)\w)"


class PatternError(ValueError):
    """Invalid pattern spec; ``offset`` is the character position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class PatternSpec:
    lang: str
    source: str


@dataclass(frozen=True)
class MatchSpan:
    pattern: PatternSpec
    start: int
    end: int
    matched_text: str


@dataclass(frozen=True)
class CompiledPattern:
    spec: PatternSpec
    regex: re.Pattern


class _Group:
    __slots__ = ("alternatives", "optional")

    def __init__(self, alternatives: list[str], optional: bool):
        self.alternatives = alternatives
        self.optional = optional


def _parse(spec: PatternSpec) -> list[str | _Group]:
    """Split the source into literal runs and groups."""
    source = spec.source
    if "\x00" in source:
        raise PatternError("NUL character not allowed", source.index("\x00"))
    parts: list[str | _Group] = []
    literal: list[str] = []
    i = 0
    while i < len(source):
        ch = source[i]
        if ch == "(":
            close = source.find(")", i + 1)
            if close == -1:
                raise PatternError("unbalanced '('", i)
            inner = source[i + 1 : close]
            if "(" in inner:
                raise PatternError("nested '(' not supported", i + 1 + inner.index("("))
            if literal:
                parts.append("".join(literal))
                literal = []
            alternatives = inner.split("|")
            if any(not alt.strip() for alt in alternatives):
                raise PatternError("empty alternative", i + 1)
            parts.append(_Group(alternatives, optional=len(alternatives) == 1))
            i = close + 1
        elif ch == ")":
            raise PatternError("unbalanced ')'", i)
        else:
            literal.append(ch)
            i += 1
    if literal:
        parts.append("".join(literal))
    return parts


def _normalize(text: str) -> str:
    """Collapse whitespace runs to single spaces and strip the ends."""
    return " ".join(text.split())


def expand_alternations(spec: PatternSpec) -> list[str]:
    """Every literal string the pattern accepts, deduplicated, order-stable."""
    parts = _parse(spec)
    choices: list[list[str]] = []
    for part in parts:
        if isinstance(part, _Group):
            options = list(part.alternatives)
            if part.optional:
                options.append("")
            choices.append(options)
        else:
            choices.append([part])

    expansions: list[str] = []
    seen: set[str] = set()
    for combo in itertools.product(*choices):
        expansion = _normalize("".join(combo))
        if not expansion:
            raise PatternError("pattern expands to the empty string", 0)
        if expansion not in seen:
            seen.add(expansion)
            expansions.append(expansion)
    return expansions


def _literal_regex(text: str) -> str:
    """Escape a literal; any whitespace run matches any whitespace run."""
    chunks = text.split()
    body = r"\s+".join(re.escape(c) for c in chunks)
    if text and text[0].isspace():
        body = r"\s+" + body
    if text and text[-1].isspace() and chunks:
        body += r"\s+"
    return body


def _variant_regex(items: list[str | _Group], boundary: bool) -> str | None:
    """One optional-group assignment rendered as a regex, or None if empty."""
    # Rebuild the variant as literal text with placeholders where the
    # alternation groups sit, so whitespace collapses exactly as it does in
    # expand_alternations.
    placeholder = "\x00"
    groups: list[_Group] = []
    raw: list[str] = []
    for item in items:
        if isinstance(item, _Group):
            groups.append(item)
            raw.append(placeholder)
        else:
            raw.append(item)
    collapsed = _normalize("".join(raw))
    if not collapsed:
        return None

    pieces: list[str] = []
    group_iter = iter(groups)
    for fragment in collapsed.split(placeholder):
        pieces.append(_literal_regex(fragment) if fragment else "")
        group = next(group_iter, None)
        if group is not None:
            alts = sorted((_normalize(a) for a in group.alternatives), key=len, reverse=True)
            pieces.append("(?:" + "|".join(_literal_regex(a) for a in alts) + ")")
    body = "".join(pieces)
    if boundary:
        body = _EDGE_GUARD + body + _EDGE_GUARD
    return body


def compile_pattern(spec: PatternSpec) -> CompiledPattern:
    """Compile to a matcher accepting exactly the pattern's expansions."""
    parts = _parse(spec)
    expand_alternations(spec)  # surfaces empty-expansion errors up front

    optional_indices = [i for i, p in enumerate(parts) if isinstance(p, _Group) and p.optional]
    boundary = spec.lang not in UNSEGMENTED_LANGS

    variants: list[tuple[int, str]] = []
    for included in itertools.product((True, False), repeat=len(optional_indices)):
        items: list[str | _Group] = []
        on_count = 0
        assignment = dict(zip(optional_indices, included))
        for i, part in enumerate(parts):
            if isinstance(part, _Group) and part.optional:
                if assignment[i]:
                    items.append(part.alternatives[0])
                    on_count += 1
            else:
                items.append(part)
        rendered = _variant_regex(items, boundary)
        if rendered is not None:
            variants.append((on_count, rendered))

    # Fuller variants first so the leftmost match prefers the longest form.
    variants.sort(key=lambda pair: -pair[0])
    pattern = "|".join(v for _, v in variants)
    return CompiledPattern(spec=spec, regex=re.compile(pattern, re.IGNORECASE))


def match_text(pattern: CompiledPattern, text: str) -> list[MatchSpan]:
    """All non-overlapping leftmost matches, sorted by start offset."""
    spans = []
    for m in pattern.regex.finditer(text):
        spans.append(
            MatchSpan(pattern=pattern.spec, start=m.start(), end=m.end(), matched_text=m.group(0))
        )
    return spans
