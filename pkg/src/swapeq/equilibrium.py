"""Single-edge swap deviations, their exact cost differences, equilibrium
verdicts and best-response dynamics.

A deviation of agent u replaces one incident edge {u, v} by {u, v'}; its
cost difference is D(u) in the deviated graph minus D(u) in the original,
with +INF when the swap disconnects the agent from somebody.  A connected
graph is an equilibrium when every deviation of every agent has
non-negative cost difference.

Targets v' already adjacent to u are not enumerated: the swap would merely
delete {u, v} (the multigraph collapses), and removing an edge never
shortens any distance, so such a move can never be strictly improving and
cannot change a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graph import INF, Graph, GraphError
from .structure import _require_connected


@dataclass(frozen=True, order=True)
class Deviation:
    """Swap of edge {agent, drop} for edge {agent, add}."""

    agent: int
    drop: int
    add: int

    def validate(self, g: Graph) -> None:
        g.check_vertex(self.agent)
        g.check_vertex(self.drop)
        g.check_vertex(self.add)
        if not g.has_edge(self.agent, self.drop):
            raise GraphError(f"{self} drops a non-edge")
        if self.add in (self.agent, self.drop):
            raise GraphError(f"{self} adds an edge to itself or the dropped end")


@dataclass(frozen=True)
class EquilibriumVerdict:
    is_equilibrium: bool
    witness: tuple[Deviation, int] | None
    per_agent_min: dict  # agent -> minimal cost delta (agents with >= 1 deviation)


@dataclass(frozen=True)
class DynamicsTrace:
    states: tuple[Graph, ...]
    moves: tuple[Deviation, ...]
    outcome: str  # converged | cycled | step_limit


def enumerate_deviations(g: Graph, u: int) -> list[Deviation]:
    """All swaps available to u, ordered by (drop, add)."""
    g.check_vertex(u)
    out = []
    for v in g.neighbors(u):
        for vp in range(g.n):
            if vp == u or vp == v or g.has_edge(u, vp):
                continue
            out.append(Deviation(u, v, vp))
    return out


def apply_deviation(g: Graph, d: Deviation) -> Graph:
    """The deviated graph; edge count is preserved for enumerated swaps."""
    d.validate(g)
    return g.replace_edge(d.agent, d.drop, d.add)


def cost_delta(g: Graph, d: Deviation):
    """D(agent) after the swap minus before; +INF on disconnection.

    Only distances from the agent change sign-relevantly, so one BFS in the
    deviated graph suffices.
    """
    d.validate(g)
    before = kernels.sum_dist(g.adj, d.agent)
    if before < 0:
        raise GraphError("cost_delta requires a connected graph")
    after = kernels.swapped_sum_dist(g.adj, d.agent, d.drop, d.add)
    if after < 0:
        return INF
    return after - before


def is_equilibrium(g: Graph) -> EquilibriumVerdict:
    """Exhaustive verdict over every deviation of every agent.

    The witness, when present, is the first strictly improving deviation in
    (agent, drop, add) order, paired with its cost delta.
    """
    _require_connected(g)
    witness = None
    mins: dict = {}
    for u in range(g.n):
        before = kernels.sum_dist(g.adj, u)
        best = None
        for d in enumerate_deviations(g, u):
            after = kernels.swapped_sum_dist(g.adj, u, d.drop, d.add)
            delta = INF if after < 0 else after - before
            if best is None or delta < best:
                best = delta
            if witness is None and isinstance(delta, int) and delta < 0:
                witness = (d, delta)
        if best is not None:
            mins[u] = best
    return EquilibriumVerdict(witness is None, witness, mins)


def best_response_step(g: Graph):
    """Deviation minimising (delta, agent, drop, add) if strictly improving."""
    _require_connected(g)
    found = kernels.best_swap(g.adj)
    if found is None:
        return None
    delta, u, v, vp = found
    d = Deviation(u, v, vp)
    return d, apply_deviation(g, d)


def run_dynamics(g: Graph, step_limit: int) -> DynamicsTrace:
    """Iterate best responses until equilibrium, a repeated labelled state,
    or the step limit."""
    _require_connected(g)
    states = [g]
    moves: list[Deviation] = []
    seen = {g.adj}
    current = g
    while True:
        step = best_response_step(current)
        if step is None:
            return DynamicsTrace(tuple(states), tuple(moves), "converged")
        if len(moves) >= step_limit:
            return DynamicsTrace(tuple(states), tuple(moves), "step_limit")
        d, nxt = step
        moves.append(d)
        states.append(nxt)
        if nxt.adj in seen:
            return DynamicsTrace(tuple(states), tuple(moves), "cycled")
        seen.add(nxt.adj)
        current = nxt
