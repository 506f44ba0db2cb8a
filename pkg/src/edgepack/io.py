"""Edge-list and DIMACS graph formats.

edgelist: first line ``n m``, then ``m`` lines ``u v`` with 0-based vertices.
dimacs:   ``c`` comments, one ``p edge n m`` line, ``m`` lines ``e u v`` (1-based).
Blank lines are ignored in both; ``#`` starts a comment line in edgelist files.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .errors import InputError
from .graph import Graph, build_graph

FORMATS = ("edgelist", "dimacs")


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"expected an integer, got {token!r}", line=lineno) from None


def _finish(n: int, m: int, pairs: list[tuple[int, int, int]], last_line: int) -> Graph:
    if len(pairs) != m:
        raise InputError(f"header declares {m} edges, found {len(pairs)}", line=last_line)
    for u, v, lineno in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside [0, {n})", line=lineno)
        if u == v:
            raise InputError(f"self-loop at vertex {u}", line=lineno)
    return build_graph(n, [(u, v) for u, v, _ in pairs])


def parse_edgelist(lines: Iterable[str]) -> Graph:
    header = None
    pairs: list[tuple[int, int, int]] = []
    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"expected two integers, got {line!r}", line=lineno)
        a, b = _int(parts[0], lineno), _int(parts[1], lineno)
        if header is None:
            if a < 0 or b < 0:
                raise InputError("vertex and edge counts must be non-negative", line=lineno)
            header = (a, b)
        else:
            pairs.append((a, b, lineno))
    if header is None:
        raise InputError("missing 'n m' header line", line=lineno or 1)
    return _finish(header[0], header[1], pairs, lineno)


def parse_dimacs(lines: Iterable[str]) -> Graph:
    header = None
    pairs: list[tuple[int, int, int]] = []
    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise InputError("second problem line", line=lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise InputError(f"expected 'p edge n m', got {line!r}", line=lineno)
            header = (_int(parts[2], lineno), _int(parts[3], lineno))
        elif parts[0] == "e":
            if header is None:
                raise InputError("edge line before the problem line", line=lineno)
            if len(parts) != 3:
                raise InputError(f"expected 'e u v', got {line!r}", line=lineno)
            pairs.append((_int(parts[1], lineno) - 1, _int(parts[2], lineno) - 1, lineno))
        else:
            raise InputError(f"unknown line type {parts[0]!r}", line=lineno)
    if header is None:
        raise InputError("missing 'p edge n m' line", line=lineno or 1)
    return _finish(header[0], header[1], pairs, lineno)


def parse_graph(stream: TextIO | str, fmt: str = "edgelist") -> Graph:
    lines = stream.splitlines() if isinstance(stream, str) else stream
    if fmt == "edgelist":
        return parse_edgelist(lines)
    if fmt == "dimacs":
        return parse_dimacs(lines)
    raise InputError(f"unknown format {fmt!r}")


def serialize_graph(g: Graph, fmt: str = "edgelist") -> str:
    """Canonical text: sorted edges with ``u < v``."""
    edges = g.sorted_edges()
    if fmt == "edgelist":
        body = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in edges]
    elif fmt == "dimacs":
        body = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in edges]
    else:
        raise InputError(f"unknown format {fmt!r}")
    return "\n".join(body) + "\n"


def parse_edge_set(lines: Iterable[str] | str) -> list[tuple[int, int]]:
    """Read ``u v`` lines (0-based); ``#`` comments and blank lines are skipped."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    out = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"expected two integers, got {line!r}", line=lineno)
        out.append((_int(parts[0], lineno), _int(parts[1], lineno)))
    return out
