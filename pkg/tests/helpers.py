"""Shared builders for the test suite."""

import random

from syncalg.algebra import ALL_RELS, Rel
from syncalg.matrix import SyncMatrix, default_labels


def random_matrix(rng: random.Random, n: int, allowed=ALL_RELS) -> SyncMatrix:
    """A valid matrix with each above-diagonal cell drawn from ``allowed``."""
    grid = [[Rel.ANY] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            cell = rng.choice(allowed)
            grid[i][j] = cell
            grid[j][i] = cell.converse()
    return SyncMatrix(default_labels(n), tuple(tuple(row) for row in grid))
