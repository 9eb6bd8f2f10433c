"""Immutable simple graphs with exact hop-distance arithmetic.

Vertices are 0..n-1 (n <= 64); adjacency is stored as one neighbour bitmask
per vertex so the distance and set computations downstream reduce to word
operations.  All distance values are exact ints or the INF sentinel, never
floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import kernels

MAX_VERTICES = 64

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class _Infinity:
    """Sentinel for unreachable distances: greater than every int, absorbing
    under addition."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("swapeq.INF")

    def __lt__(self, other):
        if isinstance(other, (int, _Infinity)):
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, _Infinity):
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, int):
            return True
        if isinstance(other, _Infinity):
            return False
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, _Infinity)):
            return True
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, (int, _Infinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        raise ArithmeticError("INF has no negative")


INF = _Infinity()

Dist = "int | _Infinity"  # documentation alias; annotations use int | _Infinity


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    adj: tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def edges(self) -> tuple[Edge, ...]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return tuple(out)

    def neighbors(self, u: int) -> tuple[int, ...]:
        row = self.adj[u]
        out = []
        while row:
            b = row & -row
            out.append(b.bit_length() - 1)
            row ^= b
        return tuple(out)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise VertexRangeError(f"vertex {u} out of range 0..{self.n - 1}")

    def replace_edge(self, u: int, drop: int, add: int) -> "Graph":
        """New graph with edge {u, drop} removed and {u, add} present.

        Set semantics: if {u, add} already exists the result simply loses
        {u, drop}.
        """
        rows = list(self.adj)
        rows[u] &= ~(1 << drop)
        rows[drop] &= ~(1 << u)
        rows[u] |= 1 << add
        rows[add] |= 1 << u
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class DistanceVector:
    """BFS distances from one source; entries are ints or INF."""

    source: int
    dist: tuple

    def __getitem__(self, v: int):
        return self.dist[v]


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Validate and build a graph from an edge list.

    Rejects self-loops, duplicate edges (in either orientation) and
    out-of-range vertex ids, each with its own error type.
    """
    if not isinstance(n, int) or n < 1:
        raise VertexRangeError(f"vertex count must be a positive int, got {n!r}")
    if n > MAX_VERTICES:
        raise VertexRangeError(f"at most {MAX_VERTICES} vertices supported, got {n}")
    rows = [0] * n
    for e in edges:
        u, v = e
        if not (isinstance(u, int) and isinstance(v, int)):
            raise VertexRangeError(f"non-integer vertex in edge {e!r}")
        if u == v:
            raise SelfLoopError(f"self-loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if rows[u] >> v & 1:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def graph_from_adj(n: int, adj: tuple[int, ...]) -> Graph:
    """Wrap pre-validated adjacency rows (internal fast path)."""
    return Graph(n, tuple(adj))


def bfs_distances(g: Graph, u: int) -> DistanceVector:
    """Single-source shortest hop distances; INF marks unreachable vertices."""
    g.check_vertex(u)
    raw = kernels.bfs_dists(g.adj, u)
    return DistanceVector(u, tuple(INF if d < 0 else d for d in raw))


def sum_distances(g: Graph, u: int):
    """Sum of distances from u to every other vertex; INF if any unreachable."""
    g.check_vertex(u)
    s = kernels.sum_dist(g.adj, u)
    return INF if s < 0 else s


def sum_distances_restricted(g: Graph, u: int, zs: Iterable[int]):
    """Sum of d(u, z) over z in zs (u itself contributes 0 if present)."""
    g.check_vertex(u)
    raw = kernels.bfs_dists(g.adj, u)
    total = 0
    for z in zs:
        g.check_vertex(z)
        d = raw[z]
        if d < 0:
            return INF
        total += d
    return total


def diameter(g: Graph):
    """Largest pairwise distance; INF when disconnected."""
    d = kernels.diameter(g.adj)
    return INF if d < 0 else d


def is_connected(g: Graph) -> bool:
    return kernels.is_connected(g.adj)


def distance_layer(g: Graph, subset: Iterable[int], u: int, i: int) -> frozenset[int]:
    """Vertices of the subset at distance exactly i from u (measured in g)."""
    g.check_vertex(u)
    raw = kernels.bfs_dists(g.adj, u)
    return frozenset(v for v in subset if raw[v] == i)
