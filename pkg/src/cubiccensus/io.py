"""graph6 and edge-list serialisation, plus JSON/CSV report documents."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from . import __version__
from .errors import CubicCensusError, MalformedInputError
from .graph import Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_VERTICES = 62


def encode_graph6(g: Graph) -> str:
    n = g.num_vertices
    if n > MAX_GRAPH6_VERTICES:
        raise ValueError("short graph6 form holds at most 62 vertices")
    bits = [g.adjacency[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def decode_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise MalformedInputError("empty graph6 string")
    codes = [ord(ch) - 63 for ch in text]
    if any(not 0 <= c <= 63 for c in codes):
        raise MalformedInputError(f"invalid graph6 character in {text!r}")
    n = codes[0]
    if n == 63:
        raise MalformedInputError("long-form graph6 (more than 62 vertices) is not supported")
    nbits = n * (n - 1) // 2
    if len(codes) - 1 != (nbits + 5) // 6:
        raise MalformedInputError(f"graph6 length does not match {n} vertices")
    bits = [(c >> (5 - k)) & 1 for c in codes[1:] for k in range(6)]
    if any(bits[nbits:]):
        raise MalformedInputError("nonzero graph6 padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return build_graph(n, edges)


def read_graph6(text: str) -> list[Graph]:
    return [decode_graph6(line) for line in text.splitlines() if line.strip()]


def encode_edge_list(g: Graph) -> str:
    lines = [f"{g.num_vertices} {g.num_edges}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def decode_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        raise MalformedInputError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [tuple(int(x) for x in row) for row in rows[1:]]
    except ValueError as exc:
        raise MalformedInputError(f"non-integer token: {exc}") from None
    if len(header) != 2:
        raise MalformedInputError("header must be '<num_vertices> <num_edges>'")
    n, m = header
    if any(len(p) != 2 for p in pairs):
        raise MalformedInputError("every edge line needs exactly two vertices")
    if len(pairs) != m:
        raise MalformedInputError(f"header announces {m} edges, found {len(pairs)}")
    return build_graph(n, pairs)


def read_graphs(text: str, fmt: str) -> list[Graph]:
    if fmt == "g6":
        return read_graph6(text)
    if fmt == "edges":
        return [decode_edge_list(text)]
    raise MalformedInputError(f"unknown format {fmt!r}")


def write_graphs(graphs: Iterable[Graph], fmt: str) -> str:
    graphs = list(graphs)
    if fmt == "g6":
        return "".join(encode_graph6(g) + "\n" for g in graphs)
    if fmt == "edges":
        if len(graphs) != 1:
            raise CubicCensusError("edge-list files hold exactly one graph")
        return encode_edge_list(graphs[0])
    raise MalformedInputError(f"unknown format {fmt!r}")


@dataclass
class ReportDocument:
    """Self-describing JSON report: every row names its algorithm."""

    command: str
    params: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    checked: int = 0
    passed: int = 0
    failed: int = 0
    version: str = __version__

    def to_dict(self) -> dict[str, Any]:
        return {
            "version": self.version,
            "command": self.command,
            "params": self.params,
            "rows": self.rows,
            "summary": {"checked": self.checked, "passed": self.passed, "failed": self.failed},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(x) for x in row])
    return buf.getvalue()
