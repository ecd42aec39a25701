"""Transitive closure of a synchronization matrix.

Declared constraints imply constraints nobody wrote down: a > b and
b > c force a > c.  Closure conjoins every cell with everything the
other events transmit to it, over and over, until the grid stops
changing.  The result exposes three things the raw declarations hide:

* the implied synchronizations (cells that shrank);
* each event's boundedness, read off the closed rows;
* deadlock, an empty cell, meaning no assignment of times can satisfy
  the declarations at all.

The fixpoint does not depend on the sweep order, and the pass count is
small: each of the (n*n - n) / 2 independent cells can only shrink, a
shrink removes at least one of three atoms, and a full pass with no
change ends the loop, so 3 * (n*n - n) / 2 + 1 passes bound the worst
case, comfortably under 3 * n**2 + 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .algebra import Bound, Rel
from .errors import ValidationError
from .matrix import BoundVector, SyncMatrix


class NeqMode(enum.Enum):
    """Treatment of declared exclusions (!=) ahead of closure.

    KEEP takes them at face value.  AS_LT and AS_GT rewrite each declared
    exclusion into a strict order in the direction it was written, which
    is how exclusion is resolved on hardware offering only one-sided
    waits.  The rewrite is direction-sensitive, so it applies to directed
    declarations; a matrix cell has already forgotten which way the
    declaration pointed, and for bare matrices the above-diagonal cell is
    taken as the written direction.
    """

    KEEP = "keep"
    AS_LT = "lt"
    AS_GT = "gt"


class ImpliedChange(NamedTuple):
    """One cell the closure shrank: (i, j) with its before and after."""

    i: int
    j: int
    before: Rel
    after: Rel


@dataclass(frozen=True)
class ClosureReport:
    """Everything the closure of one matrix reveals.

    ``deadlock_pairs`` and ``implied`` list above-diagonal positions
    only, since the mirror cells carry the same information.
    ``iterations`` counts full sweeps including the final one that
    verified the fixpoint.
    """

    closed: SyncMatrix
    bounds: BoundVector
    deadlocked: bool
    deadlock_pairs: tuple[tuple[int, int], ...]
    implied: tuple[ImpliedChange, ...]
    iterations: int


def substitute_neq(
    entries: Iterable[tuple[int, int, Rel]],
    mode: NeqMode,
) -> list[tuple[int, int, Rel]]:
    """Apply a NeqMode to directed declarations.

    Only exact exclusion declarations are rewritten; composite cells that
    merely contain the exclusion's atoms arise from conjunction, not from
    a written !=, and keep their meaning.
    """
    if mode is NeqMode.KEEP:
        return list(entries)
    replacement = Rel.LT if mode is NeqMode.AS_LT else Rel.GT
    return [
        (i, j, replacement if rel == Rel.NE else rel)
        for i, j, rel in entries
    ]


def _propagate(cells: list[list[Rel]], pair_order: Sequence[tuple[int, int]] | None = None) -> int:
    """Run the fixpoint in place; returns the number of full passes."""
    n = len(cells)
    if pair_order is None:
        pair_order = [(i, j) for i in range(n) for j in range(i + 1, n)]
    passes = 0
    changed = True
    while changed:
        changed = False
        passes += 1
        for i, j in pair_order:
            through = Rel.ANY
            for k in range(n):
                if k != i and k != j:
                    through &= cells[i][k].compose(cells[k][j])
            narrowed = cells[i][j] & through
            if narrowed != cells[i][j]:
                cells[i][j] = narrowed
                cells[j][i] = narrowed.converse()
                changed = True
    return passes


def close(matrix: SyncMatrix, mode: NeqMode = NeqMode.KEEP) -> ClosureReport:
    """Close the matrix and report implications, bounds, and deadlock."""
    cells = [list(row) for row in matrix.cells]
    n = len(cells)
    if mode is not NeqMode.KEEP:
        replacement = Rel.LT if mode is NeqMode.AS_LT else Rel.GT
        for i in range(n):
            for j in range(i + 1, n):
                if cells[i][j] == Rel.NE:
                    cells[i][j] = replacement
                    cells[j][i] = replacement.converse()
    start = tuple(tuple(row) for row in cells)
    iterations = _propagate(cells)
    closed = SyncMatrix(matrix.labels, tuple(tuple(row) for row in cells))
    implied = tuple(
        ImpliedChange(i, j, start[i][j], closed.cells[i][j])
        for i in range(n)
        for j in range(i + 1, n)
        if closed.cells[i][j] != start[i][j]
    )
    deadlock_pairs = tuple(
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if closed.cells[i][j] == Rel.NEVER
    )
    return ClosureReport(
        closed=closed,
        bounds=boundedness(closed),
        deadlocked=bool(deadlock_pairs),
        deadlock_pairs=deadlock_pairs,
        implied=implied,
        iterations=iterations,
    )


def boundedness(matrix: SyncMatrix) -> BoundVector:
    """Each event's bound: the intersection of its row off the diagonal.

    Meaningful on a closed matrix, where every implied constraint has
    already landed in the cells; on a raw matrix it reflects only the
    declarations.  For a single event the empty intersection is the full
    relation: unbounded.
    """
    out = []
    for i in range(matrix.n):
        acc = Rel.ANY
        for j in range(matrix.n):
            if j != i:
                acc &= matrix.cells[i][j]
        out.append(Bound(acc))
    return BoundVector(tuple(out))


def equivalent(p: SyncMatrix, q: SyncMatrix, mode: NeqMode = NeqMode.KEEP) -> bool:
    """True when the two systems imply the same synchronizations.

    The matrices must mention the same events; their order may differ,
    and q is realigned to p's order by event swaps before comparing the
    closures.
    """
    if sorted(p.labels) != sorted(q.labels):
        raise ValidationError("matrices constrain different event sets")
    aligned = q
    for i, name in enumerate(p.labels):
        j = aligned.labels.index(name)
        if j != i:
            aligned = aligned.swap_events(i, j)
    return close(p, mode).closed == close(aligned, mode).closed
