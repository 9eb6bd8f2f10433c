"""Graph and report serialization: graph6, edge-list text, JSON/CSV reports.

graph6 follows the public format: a size byte n+63 (n <= 62 here), then the
upper triangle of the adjacency matrix in column-major order packed into
6-bit groups, each group offset by 63 into the printable range.
"""

from __future__ import annotations

import csv
import io as _stdio
import json
from dataclasses import dataclass
from typing import Any

from .graph import Graph, GraphError, build_graph

GRAPH6_PREFIX = ">>graph6<<"
GRAPH6_MAX_N = 62

SURVEY_CSV_COLUMNS = (
    "graph6",
    "n",
    "m",
    "connected",
    "bipartite",
    "tree",
    "block",
    "cactus",
    "equilibrium",
    "diameter",
    "witness_deviation",
    "claim_violations",
)


class Graph6Error(ValueError):
    """Base for graph6 decode failures."""


class MalformedHeaderError(Graph6Error):
    pass


class TruncatedPayloadError(Graph6Error):
    pass


class TrailingGarbageError(Graph6Error):
    pass


class EdgeListParseError(ValueError):
    pass


def _payload_len(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (single-byte size header, n in 1..62)."""
    s = text.strip()
    if s.startswith(GRAPH6_PREFIX):
        s = s[len(GRAPH6_PREFIX):]
    if not s:
        raise MalformedHeaderError("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise MalformedHeaderError("extended size headers (n >= 63) not supported")
    if not 63 <= head <= 125:
        raise MalformedHeaderError(f"size byte {head} outside printable graph6 range")
    n = head - 63
    if n == 0:
        raise MalformedHeaderError("graph6 null graph has no vertices")
    body = s[1:]
    need = _payload_len(n)
    if len(body) < need:
        raise TruncatedPayloadError(
            f"payload for n={n} needs {need} bytes, got {len(body)}"
        )
    if len(body) > need:
        raise TrailingGarbageError(
            f"{len(body) - need} unexpected bytes after the bit payload"
        )
    bits = 0
    for ch in body:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise TruncatedPayloadError(f"payload byte {c} outside graph6 range")
        bits = (bits << 6) | (c - 63)
    nbits = 6 * need
    npairs = n * (n - 1) // 2
    if need and bits & ((1 << (nbits - npairs)) - 1):
        raise TrailingGarbageError("nonzero padding bits in final payload byte")
    edges = []
    k = nbits - 1  # index of the current bit, MSB first
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                edges.append((i, j))
            k -= 1
    return build_graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Bit-exact graph6 encoding; inverse of parse_graph6."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 single-byte headers stop at n={GRAPH6_MAX_N}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k:k + 6]:
            group = (group << 1) | b
        out.append(chr(63 + group))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse "n m" header plus m lines "u v" (0-indexed vertices)."""
    lines = text.splitlines()
    if not lines:
        raise EdgeListParseError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListParseError("line 1: expected header 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListParseError("line 1: non-integer header fields") from None
    if m < 0:
        raise EdgeListParseError("line 1: negative edge count")
    edges = []
    lineno = 1
    for raw in lines[1:]:
        lineno += 1
        if len(edges) == m:
            if raw.strip():
                raise EdgeListParseError(f"line {lineno}: trailing garbage after {m} edges")
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: non-integer vertex id") from None
        edges.append((u, v))
    if len(edges) != m:
        raise EdgeListParseError(f"expected {m} edge lines, found {len(edges)}")
    try:
        return build_graph(n, edges)
    except GraphError as err:
        # locate the offending line for the message
        try:
            build_graph(n, [])
        except GraphError:
            raise EdgeListParseError(f"line 1: {err}") from err
        for k in range(len(edges)):
            try:
                build_graph(n, edges[:k + 1])
            except GraphError:
                raise EdgeListParseError(f"line {k + 2}: {err}") from err
        raise EdgeListParseError(str(err)) from err


@dataclass(frozen=True)
class ReportDocument:
    """Serializable report: a schema tag plus an ordered payload mapping."""

    schema_version: str
    payload: dict[str, Any]


def _jsonable(obj):
    from fractions import Fraction

    from .graph import _Infinity

    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, _Infinity):
        return "INF"
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, frozenset):
        return sorted(obj)
    return obj


def write_report(doc: ReportDocument, fmt: str) -> bytes:
    """Serialize a report deterministically; fmt is "json" or "csv"."""
    if fmt == "json":
        body = {"schema_version": doc.schema_version}
        body.update(_jsonable(doc.payload))
        return (json.dumps(body, indent=2) + "\n").encode()
    if fmt == "csv":
        records = doc.payload.get("records")
        if records is None:
            raise ValueError("csv output needs a payload with 'records'")
        buf = _stdio.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(SURVEY_CSV_COLUMNS)
        for rec in records:
            writer.writerow([rec[col] for col in SURVEY_CSV_COLUMNS])
        return buf.getvalue().encode()
    raise ValueError(f"unsupported report format {fmt!r}")
