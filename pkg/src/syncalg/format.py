"""Reading and writing synchronization systems.

Three textual forms live here:

* the declaration language, one constraint per line, for people;
* a JSON interchange form for matrices and closure reports, for tools;
* Graphviz DOT output of a closed system, for eyes.

The declaration grammar is small.  ``#`` starts a comment, blank lines
are skipped, and each remaining line is either the optional directive

    events <name> <name> ...

which must come first and fixes the event order, or a constraint

    <name> <relop> <name>

with relop one of  never < = > <= >= != any  and names matching
``[A-Za-z_][A-Za-z0-9_]*``.  Without the directive, events are
registered in order of first mention; with it, mentioning an undeclared
name is an error.  Declaring the same pair twice conjoins the two
relations.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .algebra import CANONICAL_SYMBOLS, Rel
from .closure import ClosureReport, NeqMode, substitute_neq
from .errors import InterchangeError, ParseError
from .matrix import SyncMatrix

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_SYMBOL_SET = frozenset(CANONICAL_SYMBOLS)


@dataclass(frozen=True)
class Constraint:
    """One directed declaration, with its 1-based source line (0 if synthesized)."""

    lhs: str
    op: str
    rhs: str
    line: int


@dataclass(frozen=True)
class SyncSpec:
    """A parsed declaration file: event order plus directed constraints."""

    events: tuple[str, ...]
    constraints: tuple[Constraint, ...]


def parse_spec(text: str) -> SyncSpec:
    """Parse declaration text; all errors carry the offending line number."""
    events: list[str] = []
    known: set[str] = set()
    constraints: list[Constraint] = []
    closed_roster = False
    saw_significant = False

    def register(name: str, lineno: int) -> None:
        if name in known:
            return
        if closed_roster:
            raise ParseError(lineno, f"event {name!r} not named in the events directive")
        known.add(name)
        events.append(name)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not saw_significant and tokens[0] == "events" and not _constraint_shaped(tokens):
            if len(tokens) < 2:
                raise ParseError(lineno, "events directive names no events")
            for name in tokens[1:]:
                if not _NAME_RE.match(name):
                    raise ParseError(lineno, f"invalid event name {name!r}")
                if name in known:
                    raise ParseError(lineno, f"event {name!r} listed twice")
                known.add(name)
                events.append(name)
            closed_roster = True
            saw_significant = True
            continue
        saw_significant = True
        if len(tokens) != 3:
            raise ParseError(lineno, "expected '<name> <relop> <name>'")
        lhs, op, rhs = tokens
        if not _NAME_RE.match(lhs):
            raise ParseError(lineno, f"invalid event name {lhs!r}")
        if not _NAME_RE.match(rhs):
            raise ParseError(lineno, f"invalid event name {rhs!r}")
        if op not in _SYMBOL_SET:
            raise ParseError(lineno, f"unknown relation symbol {op!r}")
        if lhs == rhs:
            raise ParseError(lineno, f"event {lhs!r} cannot be synchronized with itself")
        register(lhs, lineno)
        register(rhs, lineno)
        constraints.append(Constraint(lhs, op, rhs, lineno))

    return SyncSpec(tuple(events), tuple(constraints))


def _constraint_shaped(tokens: list[str]) -> bool:
    # "events < done" is a constraint on an event named "events", not a
    # directive; only the token shape can tell the two readings apart.
    return len(tokens) == 3 and tokens[1] in _SYMBOL_SET


def spec_to_matrix(spec: SyncSpec, neq_as: NeqMode = NeqMode.KEEP) -> SyncMatrix:
    """Conjoin the declarations into a matrix, applying the != policy first.

    The policy must act here, while declarations still have a direction:
    a != b rewritten AS_LT becomes a < b, but the matrix cell it lands in
    no longer remembers whether a or b was written first.
    """
    index = {name: k for k, name in enumerate(spec.events)}
    entries = [
        (index[c.lhs], index[c.rhs], Rel.from_symbol(c.op))
        for c in spec.constraints
    ]
    return SyncMatrix.from_entries(spec.events, substitute_neq(entries, neq_as))


def matrix_to_spec(matrix: SyncMatrix) -> SyncSpec:
    """Declarations recovering the matrix: one per constrained pair above the diagonal."""
    constraints = tuple(
        Constraint(matrix.labels[i], matrix.cells[i][j].symbol, matrix.labels[j], 0)
        for i in range(matrix.n)
        for j in range(i + 1, matrix.n)
        if matrix.cells[i][j] != Rel.ANY
    )
    return SyncSpec(matrix.labels, constraints)


def spec_to_text(spec: SyncSpec) -> str:
    """Render a spec back to declaration text, directive first."""
    lines = []
    if spec.events:
        lines.append("events " + " ".join(spec.events))
    for c in spec.constraints:
        lines.append(f"{c.lhs} {c.op} {c.rhs}")
    return "\n".join(lines) + "\n"


def matrix_to_interchange(matrix: SyncMatrix) -> str:
    """JSON document for a bare matrix: events plus the symbol grid."""
    doc = {
        "events": list(matrix.labels),
        "matrix": [[cell.symbol for cell in row] for row in matrix.cells],
    }
    return json.dumps(doc)


def report_to_interchange(report: ClosureReport) -> str:
    """JSON document for a closure report.

    Pair positions are emitted as label pairs rather than indices so the
    document stands alone.
    """
    m = report.closed
    doc = {
        "events": list(m.labels),
        "matrix": [[cell.symbol for cell in row] for row in m.cells],
        "bounds": [bound.symbol for bound in report.bounds],
        "deadlock": report.deadlocked,
        "deadlock_pairs": [
            [m.labels[i], m.labels[j]] for i, j in report.deadlock_pairs
        ],
        "implied": [
            {
                "pair": [m.labels[c.i], m.labels[c.j]],
                "before": c.before.symbol,
                "after": c.after.symbol,
            }
            for c in report.implied
        ],
        "iterations": report.iterations,
    }
    return json.dumps(doc)


def interchange_to_matrix(text: str) -> SyncMatrix:
    """Read a matrix back from interchange JSON, checking the schema.

    Only ``events`` and ``matrix`` are consulted; report-level members
    and unknown keys are ignored, so a report document round-trips into
    its closed matrix.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InterchangeError(None, f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InterchangeError(None, "top-level value must be an object")

    events = doc.get("events")
    if events is None:
        raise InterchangeError("events", "missing")
    if (
        not isinstance(events, list)
        or not events
        or not all(isinstance(e, str) for e in events)
    ):
        raise InterchangeError("events", "must be a nonempty list of strings")
    if len(set(events)) != len(events):
        raise InterchangeError("events", "event names must be distinct")
    n = len(events)

    rows = doc.get("matrix")
    if rows is None:
        raise InterchangeError("matrix", "missing")
    if not isinstance(rows, list) or len(rows) != n:
        raise InterchangeError("matrix", f"must be a list of {n} rows")
    cells = []
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise InterchangeError("matrix", f"every row must hold {n} symbols")
        out_row = []
        for sym in row:
            if not isinstance(sym, str) or sym not in _SYMBOL_SET:
                raise InterchangeError("matrix", f"invalid relation symbol {sym!r}")
            out_row.append(Rel.from_symbol(sym))
        cells.append(tuple(out_row))
    try:
        return SyncMatrix(tuple(events), tuple(cells))
    except Exception as exc:
        raise InterchangeError("matrix", str(exc)) from None


def to_dot(report: ClosureReport) -> str:
    """Graphviz DOT text for a closed system.

    Nodes show the event name with its bound symbol; one edge per
    constrained above-diagonal pair, with empty (deadlocked) pairs drawn
    dashed.
    """
    m = report.closed
    lines = ["digraph synchronization {"]
    for name, bound in zip(m.labels, report.bounds):
        lines.append(f'  "{name}" [label="{name}\\n[{bound.symbol}]"];')
    for i in range(m.n):
        for j in range(i + 1, m.n):
            cell = m.cells[i][j]
            if cell == Rel.ANY:
                continue
            style = ", style=dashed" if cell == Rel.NEVER else ""
            lines.append(
                f'  "{m.labels[i]}" -> "{m.labels[j]}" [label="{cell.symbol}"{style}];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
