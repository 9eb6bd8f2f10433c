"""Aggregated swap-cost analysis over 2-edge-connected components, plus the
structural conditions every equilibrium must satisfy.

For a component H of a connected graph and an observer w, each ordered pair
(u, v) with v an H-neighbour of u spawns the family of swaps {u,v} -> {u,v'}
over the other H-neighbours v' of v.  The *shift* of the pair is the average
change of d(u, w) over that family; summing shifts over all pairs gives the
per-observer total, and summing full cost differences the same way gives the
grand total, which must coincide with the sum of the per-observer totals.
On bipartite graphs the shift has a closed form in terms of the sets of
H-neighbours one step closer / farther from the observer; the simulator
below is the ground truth it is tested against.

All values are exact rationals: the family averages divide by deg_H(v) - 1,
and sign decisions must not round.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import kernels
from .equilibrium import is_equilibrium
from .graph import Graph, GraphError
from .structure import block_vertices, classify, decompose, pendant_world


class ComponentError(GraphError):
    pass


class NotBipartiteError(GraphError):
    pass


def _validate_tecc(g: Graph, component) -> frozenset[int]:
    comp = frozenset(component)
    if comp not in decompose(g).tecc:
        raise ComponentError(f"{sorted(comp)} is not a 2-edge-connected component")
    return comp


def _require_bipartite(g: Graph) -> None:
    if kernels.bipartite_side(g.adj) < 0:
        raise NotBipartiteError("operation requires a bipartite graph")


def _h_neighbors(g: Graph, comp: frozenset[int], u: int) -> list[int]:
    return [v for v in g.neighbors(u) if v in comp]


@dataclass(frozen=True)
class LayerProfile:
    """Per-observer layer structure of a component.

    closer[u] / farther[u]: H-neighbours of u one step closer / farther from
    the observer.  entry: the unique H-vertex whose closer-set is empty (the
    vertex through which the observer sees H).  mixed: H-vertices with both
    sets nonempty.
    """

    component: frozenset[int]
    observer: int
    closer: dict
    farther: dict
    entry: int
    mixed: frozenset[int]


def layer_profile(g: Graph, component, w: int) -> LayerProfile:
    comp = _validate_tecc(g, component)
    g.check_vertex(w)
    dw = kernels.bfs_dists(g.adj, w)
    closer = {}
    farther = {}
    for u in sorted(comp):
        nbrs = _h_neighbors(g, comp, u)
        closer[u] = frozenset(v for v in nbrs if dw[v] == dw[u] - 1)
        farther[u] = frozenset(v for v in nbrs if dw[v] == dw[u] + 1)
    entry = min(comp, key=lambda u: (dw[u], u))
    no_closer = [u for u in comp if not closer[u]]
    assert no_closer == [entry], "entry vertex must be the unique one with no closer neighbour"
    assert w in pendant_world(g, comp, entry), "observer must live in the entry's world"
    mixed = frozenset(u for u in comp if closer[u] and farther[u])
    return LayerProfile(comp, w, closer, farther, entry, mixed)


def closer_neighbor(g: Graph, component, w: int, u: int) -> int:
    """The unique H-neighbour of u one step closer to w; error if not unique."""
    prof = layer_profile(g, component, w)
    down = prof.closer.get(u)
    if down is None:
        raise ComponentError(f"vertex {u} not in the component")
    if len(down) != 1:
        raise ComponentError(f"vertex {u} has {len(down)} closer neighbours, not 1")
    return next(iter(down))


def closed_form_shift(g: Graph, component, w: int, agent: int, dropped: int) -> Fraction:
    """Average change of d(agent, w) over the swap family, by the bipartite
    three-case formula (no deviated graphs are built)."""
    _require_bipartite(g)
    comp = _validate_tecc(g, component)
    prof = layer_profile(g, comp, w)
    if agent not in comp or dropped not in comp or not g.has_edge(agent, dropped):
        raise ComponentError("agent and dropped must be adjacent vertices of the component")
    deg_v = len(_h_neighbors(g, comp, dropped))
    if deg_v < 2:
        raise ComponentError("dropped vertex needs a second neighbour inside the component")
    down_u = prof.closer[agent]
    if dropped in down_u:
        if len(down_u) == 1:
            num = -len(prof.closer[dropped]) + len(prof.farther[dropped]) - 1
        else:
            num = -len(prof.closer[dropped])
        return Fraction(num, deg_v - 1)
    return Fraction(0)


def simulated_shift(g: Graph, component, w: int, agent: int, dropped: int) -> Fraction:
    """Ground-truth shift: build every deviated graph and measure d(agent, w)."""
    comp = _validate_tecc(g, component)
    g.check_vertex(w)
    if agent not in comp or dropped not in comp or not g.has_edge(agent, dropped):
        raise ComponentError("agent and dropped must be adjacent vertices of the component")
    targets = sorted(set(_h_neighbors(g, comp, dropped)) - {agent})
    if not targets:
        raise ComponentError("dropped vertex needs a second neighbour inside the component")
    d0 = kernels.bfs_dists(g.adj, agent)[w]
    total = 0
    for vp in targets:
        g2 = g.replace_edge(agent, dropped, vp)
        d1 = kernels.bfs_dists(g2.adj, agent)[w]
        assert d1 >= 0, "swap inside a bridgeless component cannot disconnect"
        total += d1 - d0
    return Fraction(total, len(targets))


@dataclass(frozen=True)
class SwapAggregate:
    """Every aggregate the analysis uses, all exact.

    shifts[(w, u, v)]: average d(u, w) change for the (u, v) swap family.
    per_observer[w]: sum of shifts over all pairs.
    swap_costs[(u, v)]: average full cost difference of the family.
    total: sum of swap_costs — must equal the sum of per_observer.
    """

    component: frozenset[int]
    shifts: dict
    per_observer: dict
    swap_costs: dict
    total: Fraction

    @property
    def observer_total(self) -> Fraction:
        return sum(self.per_observer.values(), Fraction(0))


def aggregate_swaps(g: Graph, component) -> SwapAggregate:
    """Brute-force aggregation over every swap family of the component.

    Each deviated graph is built explicitly; per-observer shifts come from
    distance vectors and the grand total from independently computed
    distance sums, so the accounting identity is a real cross-check.
    """
    comp = _validate_tecc(g, component)
    n = g.n
    members = sorted(comp)
    degs = {u: len(_h_neighbors(g, comp, u)) for u in members}
    for u in members:
        if degs[u] == 1:
            raise ComponentError("component vertices must not have degree 1 inside it")

    dens = [degs[u] - 1 for u in members if degs[u] >= 2]
    common = lcm(*dens) if dens else 1

    shifts = {}
    swap_costs = {}
    obs_num = [0] * n
    total_num = 0

    for agent in members:
        d0vec = kernels.bfs_dists(g.adj, agent)
        sum0 = kernels.sum_dist(g.adj, agent)
        for dropped in sorted(_h_neighbors(g, comp, agent)):
            targets = [v for v in sorted(_h_neighbors(g, comp, dropped)) if v != agent]
            den = len(targets)
            nums = [0] * n
            cost_num = 0
            for vp in targets:
                rows = list(g.adj)
                rows[agent] = (rows[agent] & ~(1 << dropped)) | (1 << vp)
                rows[dropped] &= ~(1 << agent)
                rows[vp] |= 1 << agent
                d1vec = kernels.bfs_dists(rows, agent)
                for w in range(n):
                    nums[w] += d1vec[w] - d0vec[w]
                cost_num += kernels.sum_dist(rows, agent) - sum0
            for w in range(n):
                shifts[(w, agent, dropped)] = Fraction(nums[w], den)
                obs_num[w] += nums[w] * (common // den)
            swap_costs[(agent, dropped)] = Fraction(cost_num, den)
            total_num += cost_num * (common // den)

    per_observer = {w: Fraction(obs_num[w], common) for w in range(n)}
    return SwapAggregate(
        component=comp,
        shifts=shifts,
        per_observer=per_observer,
        swap_costs=swap_costs,
        total=Fraction(total_num, common),
    )


@dataclass(frozen=True)
class RatioCase:
    """One vertex whose closer-set is a singleton, with the bounded ratio."""

    vertex: int
    via: int  # its unique closer neighbour
    ratio: Fraction
    tight: bool
    via_is_entry: bool


@dataclass(frozen=True)
class InequalityReport:
    """Numeric evaluation of the chain bounding the per-observer total.

    down_mass >= z_count lower-bounds the descending contributions;
    each ratio (and hence up_mass <= single_down_count) upper-bounds the
    ascending ones; together the per-observer total is at most
    single_down_count - z_count <= 0.
    """

    observer: int
    down_mass: Fraction
    z_count: int
    down_tight: bool
    ratio_cases: tuple[RatioCase, ...]
    up_mass: Fraction
    single_down_count: int
    up_tight: bool
    formula_total: Fraction
    observer_total: Fraction
    bound: Fraction
    final_bound_holds: bool


def check_inequalities(
    g: Graph, component, w: int, aggregate: SwapAggregate | None = None
) -> InequalityReport:
    """Evaluate both sides of every inequality in the nonpositivity argument."""
    _require_bipartite(g)
    comp = _validate_tecc(g, component)
    prof = layer_profile(g, comp, w)
    degs = {u: len(_h_neighbors(g, comp, u)) for u in comp}

    down_mass = Fraction(0)
    for v in prof.mixed:
        down_mass += Fraction(len(prof.closer[v]) * len(prof.farther[v]), degs[v] - 1)
    z_count = len(prof.mixed)

    cases = []
    up_mass = Fraction(0)
    for u in sorted(comp):
        if len(prof.closer[u]) != 1:
            continue
        x = next(iter(prof.closer[u]))
        ratio = Fraction(len(prof.farther[x]) - 1, degs[x] - 1)
        up_mass += ratio
        cases.append(RatioCase(u, x, ratio, ratio == 1, x == prof.entry))
    single_down_count = len(cases)

    if aggregate is None:
        aggregate = aggregate_swaps(g, comp)
    observer_total = aggregate.per_observer[w]
    bound = Fraction(single_down_count - z_count)
    return InequalityReport(
        observer=w,
        down_mass=down_mass,
        z_count=z_count,
        down_tight=down_mass == z_count,
        ratio_cases=tuple(cases),
        up_mass=up_mass,
        single_down_count=single_down_count,
        up_tight=up_mass == single_down_count,
        formula_total=up_mass - down_mass,
        observer_total=observer_total,
        bound=bound,
        final_bound_holds=observer_total <= bound <= 0,
    )


@dataclass(frozen=True)
class StrictWitness:
    observer: int
    shift_total: Fraction  # strictly negative


def component_diameter(g: Graph, component) -> int:
    """Largest distance between component vertices (graph metric)."""
    comp = sorted(frozenset(component))
    best = 0
    for u in comp:
        dv = kernels.bfs_dists(g.adj, u)
        for v in comp:
            if dv[v] > best:
                best = dv[v]
    return best


def strict_witness(g: Graph, component) -> StrictWitness | None:
    """An observer with strictly negative per-observer total, whenever the
    component's diameter exceeds 2 (bipartite graphs).

    The observer is the lexicographically first endpoint of a diametral pair
    (it belongs to its own pendant world).  Returns None when the diameter
    is at most 2.
    """
    _require_bipartite(g)
    comp = _validate_tecc(g, component)
    members = sorted(comp)
    best = (0, members[0])
    for u in members:
        dv = kernels.bfs_dists(g.adj, u)
        ecc = max(dv[v] for v in members)
        if ecc > best[0]:
            best = (ecc, u)
    diam, endpoint = best
    if diam <= 2:
        return None
    total = aggregate_swaps(g, comp).per_observer[endpoint]
    if not total < 0:
        raise AssertionError(
            f"diameter {diam} component without a negative observer total "
            f"(observer {endpoint}, total {total}) — reportable finding"
        )
    return StrictWitness(endpoint, total)


def bridge_degree_condition(g: Graph):
    """True iff every bridge has a degree-1 endpoint; else the violator."""
    for a, b in decompose(g).bridges:
        if g.degree(a) != 1 and g.degree(b) != 1:
            return False, (a, b)
    return True, None


def single_pendant_condition(g: Graph) -> bool:
    """Every 2-edge-connected component carries at most one nontrivial world."""
    dec = decompose(g)
    if all(len(t) == 1 for t in dec.tecc):
        raise GraphError("tree input: no cyclic 2-edge-connected component")
    for comp in dec.tecc:
        nontrivial = 0
        for u in comp:
            if pendant_world(g, comp, u) != frozenset({u}):
                nontrivial += 1
                if nontrivial > 1:
                    return False
    return True


def adjacent_cut_condition(g: Graph) -> bool:
    """For adjacent cut vertices in a block, at least one world is trivial."""
    dec = decompose(g)
    cuts = dec.cut_vertices
    for block in dec.bcc:
        vb = block_vertices(block)
        for a, b in block:
            if a in cuts and b in cuts:
                wa = pendant_world(g, vb, a)
                wb = pendant_world(g, vb, b)
                if len(wa) > 1 and len(wb) > 1:
                    return False
    return True


@dataclass(frozen=True)
class CactusCycleReport:
    max_cycle_len_ok: bool  # every cycle has length <= 5
    world_balance_ok: bool  # 4- and 5-cycles carry equal-size worlds
    long_cycle_count_ok: bool  # at most one cycle longer than a triangle


def cactus_cycle_report(g: Graph) -> CactusCycleReport:
    if not classify(g).cactus:
        raise GraphError("cycle conditions are defined for cactus graphs only")
    dec = decompose(g)
    cycles = [block_vertices(b) for b in dec.bcc if len(b) >= 3]
    max_len_ok = all(len(c) <= 5 for c in cycles)
    balance_ok = True
    for c in cycles:
        if len(c) in (4, 5):
            sizes = {len(pendant_world(g, c, u)) for u in c}
            if len(sizes) > 1:
                balance_ok = False
    long_ok = sum(1 for c in cycles if len(c) > 3) <= 1
    return CactusCycleReport(max_len_ok, balance_ok, long_ok)


@dataclass(frozen=True)
class KrsVerdict:
    complete_bipartite: tuple[int, int] | None
    is_equilibrium: bool


def bipartite_characterization(g: Graph) -> KrsVerdict:
    """Pair the complete-bipartite test with the equilibrium verdict."""
    _require_bipartite(g)
    cls = classify(g)
    verdict = is_equilibrium(g)
    return KrsVerdict(cls.complete_bipartite, verdict.is_equilibrium)
