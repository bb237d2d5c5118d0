"""Rule configuration: debunking patterns, relation labels, stoplists.

One plain-text file drives all language-specific behaviour, so adding a
language never touches code.  Sections are ``[patterns.<lang>]`` (one
pattern per line), ``[relations]`` and ``[demonstratives.<lang>]``.
Comment lines start with ``;`` — ``#`` would collide with hashtag
patterns.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .extraction import DEFAULT_RELATIONS, ExtractionRules
from .patterns import CompiledPattern, PatternSpec, compile_pattern


class RulesConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RuleConfig:
    patterns: dict[str, tuple[PatternSpec, ...]]
    extraction: ExtractionRules

    @property
    def langs(self) -> tuple[str, ...]:
        return tuple(sorted(self.patterns))

    def compiled(self, lang: str) -> list[CompiledPattern]:
        return [compile_pattern(spec) for spec in self.patterns.get(lang, ())]


def parse_rules_config(text: str) -> RuleConfig:
    patterns: dict[str, list[PatternSpec]] = {}
    relations: list[str] = []
    demonstratives: dict[str, set[str]] = {}

    section: str | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(";"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            continue
        if section is None:
            raise RulesConfigError(f"line {line_no}: content before any section header")
        if section.startswith("patterns."):
            lang = section[len("patterns."):]
            patterns.setdefault(lang, []).append(PatternSpec(lang=lang, source=line))
        elif section == "relations":
            relations.append(line)
        elif section.startswith("demonstratives."):
            lang = section[len("demonstratives."):]
            demonstratives.setdefault(lang, set()).add(line.casefold())
        else:
            raise RulesConfigError(f"line {line_no}: unknown section [{section}]")

    if not patterns:
        raise RulesConfigError("no [patterns.<lang>] sections found")
    extraction = ExtractionRules(
        relations=frozenset(relations) if relations else DEFAULT_RELATIONS,
        demonstratives={lang: frozenset(words) for lang, words in demonstratives.items()},
    )
    return RuleConfig(
        patterns={lang: tuple(specs) for lang, specs in patterns.items()},
        extraction=extraction,
    )


def load_rules_config(path: str | Path | None = None) -> RuleConfig:
    """Load from *path*, or the packaged defaults when omitted."""
    if path is None:
        text = resources.files("fakefeed.data").joinpath("rules.cfg").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_rules_config(text)
