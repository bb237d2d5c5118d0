"""Word Mover's Distance over event phrases, solved exactly.

The distance between two nBOW distributions is the optimal transport cost
with Euclidean distances between word vectors as unit costs.  The word
centroid distance is a cheap lower bound used to skip hopeless pairs.
"""
from __future__ import annotations

import numpy as np

from .embeddings import EmbeddingTable, NBow
from .transport import solve_transport


def _stack(side: NBow, table: EmbeddingTable) -> tuple[np.ndarray, np.ndarray]:
    vectors = np.stack([table[w] for w in side.words])
    weights = np.asarray(side.weights, dtype=np.float64)
    return vectors, weights


def wmd(a: NBow, b: NBow, table: EmbeddingTable) -> float:
    """Exact Word Mover's Distance between two distributions."""
    xs, wa = _stack(a, table)
    ys, wb = _stack(b, table)
    cost = np.sqrt(((xs[:, None, :] - ys[None, :, :]) ** 2).sum(axis=2))
    return solve_transport(cost, wa, wb).cost


def wcd_lower_bound(a: NBow, b: NBow, table: EmbeddingTable) -> float:
    """Word centroid distance; never exceeds the WMD."""
    xs, wa = _stack(a, table)
    ys, wb = _stack(b, table)
    return float(np.linalg.norm(wa @ xs - wb @ ys))
