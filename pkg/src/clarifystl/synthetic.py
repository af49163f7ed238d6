"""Synthetic labeled embedding sets for exercising the ambiguity classifier
without any text encoder: two Gaussian clusters behind a lookup provider.
"""

from __future__ import annotations

import numpy as np

from .gateway import EmbeddingVector


class PrecomputedEmbeddingProvider:
    """Serves fixed vectors by exact text key."""

    def __init__(self, table: dict[str, np.ndarray], dimension: int):
        self.table = table
        self.dimension = dimension

    def embed(self, texts: list[str]) -> list[EmbeddingVector]:
        return [EmbeddingVector(self.table[text]) for text in texts]


def synthetic_clusters(
    dim: int = 32,
    train: int = 400,
    test: int = 100,
    seed: int = 0,
    separation: float = 4.0,
):
    """Two unit-variance Gaussian clusters `separation` sigmas apart.

    Returns (train_records, test_records, provider) where records are
    (text, label) pairs, label 1 for the positive cluster.
    """
    rng = np.random.default_rng(seed)
    half = separation / 2.0
    centers = {0: -half * np.ones(dim), 1: half * np.ones(dim) }
    table: dict[str, np.ndarray] = {}

    def make(count: int, prefix: str) -> list[tuple[str, int]]:
        records = []
        for i in range(count):
            label = i % 2
            key = f"{prefix}-{i:05d}"
            table[key] = centers[label] + rng.normal(size=dim)
            records.append((key, label))
        return records

    train_records = make(train, "train")
    test_records = make(test, "test")
    return train_records, test_records, PrecomputedEmbeddingProvider(table, dim)
