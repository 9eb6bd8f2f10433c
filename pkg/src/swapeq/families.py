"""Constructors for the small named graphs used throughout."""

from __future__ import annotations

from .graph import Graph, build_graph


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(r: int, s: int) -> Graph:
    return build_graph(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def paw() -> Graph:
    """Triangle with one pendant vertex."""
    return build_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
