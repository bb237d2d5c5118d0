"""Word-embedding tables and normalized bag-of-words distributions."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np


class EmbeddingFormatError(ValueError):
    """Malformed word-vector file."""


class EmptyDistributionError(ValueError):
    """Every token fell outside the vocabulary."""


@dataclass
class EmbeddingTable:
    dim: int
    vectors: dict[str, np.ndarray]

    def __contains__(self, word: str) -> bool:
        return word in self.vectors

    def __getitem__(self, word: str) -> np.ndarray:
        return self.vectors[word]

    def __len__(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class NBow:
    """Word weights summing to 1; the marginal of one side of the transport."""

    words: tuple[str, ...]
    weights: tuple[float, ...]
    oov_dropped: int = 0

    def __post_init__(self):
        if len(self.words) != len(self.weights):
            raise ValueError("words and weights differ in length")
        if len(set(self.words)) != len(self.words):
            raise ValueError("words must be distinct")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be non-negative")
        if abs(sum(self.weights) - 1.0) > 1e-12:
            raise ValueError(f"weights sum to {sum(self.weights)!r}, not 1")


def load_embeddings(path: str | Path) -> EmbeddingTable:
    """Load the textual format: header ``vocab_size dim``, then one word per line."""
    path = Path(path)
    vectors: dict[str, np.ndarray] = {}
    declared = dim = None
    with path.open("r", encoding="utf-8") as fp:
        for line_no, raw in enumerate(fp, start=1):
            line = raw.rstrip("\n")
            if not line.strip():
                continue
            fields = line.split()
            if declared is None:
                if len(fields) != 2:
                    raise EmbeddingFormatError(f"line {line_no}: header must be 'vocab_size dim'")
                try:
                    declared, dim = int(fields[0]), int(fields[1])
                except ValueError:
                    raise EmbeddingFormatError(f"line {line_no}: non-integer header") from None
                if declared < 0 or dim <= 0:
                    raise EmbeddingFormatError(f"line {line_no}: bad header values {declared} {dim}")
                continue
            word, values = fields[0], fields[1:]
            if len(values) != dim:
                raise EmbeddingFormatError(
                    f"line {line_no}: expected {dim} values for {word!r}, got {len(values)}"
                )
            if word in vectors:
                raise EmbeddingFormatError(f"line {line_no}: duplicate word {word!r}")
            try:
                vectors[word] = np.array([float(v) for v in values], dtype=np.float64)
            except ValueError:
                raise EmbeddingFormatError(f"line {line_no}: non-numeric value for {word!r}") from None
    if declared is None:
        raise EmbeddingFormatError("empty file: missing header")
    if len(vectors) != declared:
        raise EmbeddingFormatError(f"header declares {declared} entries, file has {len(vectors)}")
    return EmbeddingTable(dim=dim, vectors=vectors)


def nbow(tokens: Iterable[str], table: EmbeddingTable) -> NBow:
    """Count in-vocabulary tokens and normalize to a unit-mass distribution."""
    counts: dict[str, int] = {}
    dropped = 0
    for token in tokens:
        if token in table:
            counts[token] = counts.get(token, 0) + 1
        else:
            dropped += 1
    if not counts:
        raise EmptyDistributionError("no in-vocabulary tokens")
    total = sum(counts.values())
    words = tuple(counts)
    return NBow(
        words=words,
        weights=tuple(counts[w] / total for w in words),
        oov_dropped=dropped,
    )
