"""Graph file formats and the solution record.

Two input formats are read and written:

* ``edgelist``: a header line ``n m`` then ``m`` lines ``u v`` with 0-based
  identifiers. ``#`` starts a comment, blank lines are skipped.
* ``dimacs``: ``c`` comment lines, a ``p edge n m`` header and ``e u v``
  lines with 1-based identifiers.

``emit_graph`` writes edges in ascending order, so parsing its output and
emitting again reproduces the same bytes.
"""

from __future__ import annotations

import json

from clawdom.graph import Graph, GraphError, build_graph

EDGELIST = "edgelist"
DIMACS = "dimacs"
FORMATS = (EDGELIST, DIMACS)


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _lines(data: bytes):
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not UTF-8 ({exc.reason})") from None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        yield lineno, raw


def _finish(n: int, m: int, edges: list[tuple[int, int, int]], last: int) -> Graph:
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", last)
    seen: set[tuple[int, int]] = set()
    for u, v, lineno in edges:
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
    try:
        return build_graph(n, [(u, v) for u, v, _ in edges])
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def _parse_edgelist(data: bytes) -> Graph:
    header = None
    edges: list[tuple[int, int, int]] = []
    last = 0
    for lineno, raw in _lines(data):
        last = lineno
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if header is None:
            if len(tokens) != 2:
                raise ParseError("header must be 'n m'", lineno)
            header = _ints(tokens, lineno)
            if min(header) < 0:
                raise ParseError("negative count in header", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        u, v = _ints(tokens, lineno)
        n = header[0]
        for x in (u, v):
            if not 0 <= x < n:
                raise ParseError(f"vertex {x} out of range 0..{n - 1}", lineno)
        edges.append((u, v, lineno))
    if header is None:
        raise ParseError("missing header 'n m'", last or 1)
    return _finish(header[0], header[1], edges, last)


def _parse_dimacs(data: bytes) -> Graph:
    header = None
    edges: list[tuple[int, int, int]] = []
    last = 0
    for lineno, raw in _lines(data):
        last = lineno
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("second 'p' line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError("header must be 'p edge n m'", lineno)
            header = _ints(tokens[2:], lineno)
            if min(header) < 0:
                raise ParseError("negative count in header", lineno)
            continue
        if tokens[0] != "e":
            raise ParseError(f"unknown line type {tokens[0]!r}", lineno)
        if header is None:
            raise ParseError("edge before the 'p edge n m' header", lineno)
        if len(tokens) != 3:
            raise ParseError("edge line must be 'e u v'", lineno)
        u, v = _ints(tokens[1:], lineno)
        n = header[0]
        for x in (u, v):
            if not 1 <= x <= n:
                raise ParseError(f"vertex {x} out of range 1..{n}", lineno)
        edges.append((u - 1, v - 1, lineno))
    if header is None:
        raise ParseError("missing header 'p edge n m'", last or 1)
    return _finish(header[0], header[1], edges, last)


def parse_graph(data: bytes, fmt: str = EDGELIST) -> Graph:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if fmt == EDGELIST:
        return _parse_edgelist(data)
    if fmt == DIMACS:
        return _parse_dimacs(data)
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def emit_graph(g: Graph, fmt: str = EDGELIST) -> bytes:
    edges = g.edges()
    if fmt == EDGELIST:
        lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    elif fmt == DIMACS:
        lines = [f"p edge {g.n} {len(edges)}"] + [f"e {u + 1} {v + 1}" for u, v in edges]
    else:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def sniff_format(data: bytes) -> str:
    """``dimacs`` if the first meaningful line is a ``p`` or ``c`` line, else ``edgelist``."""
    for raw in data.decode("utf-8", errors="replace").splitlines():
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            return DIMACS if tokens[0] in ("p", "c", "e") else EDGELIST
    return EDGELIST


def solution_record(sol) -> dict:
    report = sol.class_report.as_dict() if sol.class_report is not None else None
    return {
        "n": sol.n,
        "gamma": sol.gamma,
        "dominating_set": sorted(sol.set),
        "branch_trace": sol.branches,
        "reductions": sol.reductions,
        "class_report": report,
    }


def emit_solution(sol) -> bytes:
    return (json.dumps(solution_record(sol)) + "\n").encode("utf-8")
