"""Command-line front end.

Subcommands: check, analyze, theory, dynamics, survey.  Exit codes: 0 on
success (check: graph is an equilibrium; survey: zero claim violations),
1 for a negative verdict, 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__, kernels
from .equilibrium import is_equilibrium, run_dynamics
from .graph import Graph, GraphError, diameter
from .io import (
    ReportDocument,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
    write_report,
)
from .structure import classify, decompose, is_bipartite, pendant_world
from .survey import (
    CLAIM_NAMES,
    SurveyConfig,
    SurveyConfigError,
    run_survey,
    survey_report,
)
from .theory import (
    aggregate_swaps,
    check_inequalities,
    closed_form_shift,
    component_diameter,
    strict_witness,
)

USAGE_ERROR = 2


class CliError(Exception):
    def __init__(self, message: str, code: int = USAGE_ERROR):
        super().__init__(message)
        self.code = code


def _load_graph(path: str, fmt: str | None) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise CliError(f"cannot read {path}: {err}") from err
    if fmt is None:
        fmt = "g6" if path.endswith(".g6") else "edges"
    try:
        if fmt == "g6":
            first = next((ln for ln in text.splitlines() if ln.strip()), "")
            return parse_graph6(first)
        return parse_edge_list(text)
    except (GraphError, ValueError) as err:
        raise CliError(f"parse error in {path}: {err}") from err


def _emit(doc: ReportDocument, fmt: str, out: str | None) -> None:
    data = write_report(doc, fmt)
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.write(data.decode())
        sys.stdout.flush()


def _cmd_check(args) -> int:
    g = _load_graph(args.input, args.format)
    if not kernels.is_connected(g.adj):
        raise CliError("check requires a connected graph")
    verdict = is_equilibrium(g)
    if verdict.is_equilibrium:
        print("equilibrium: true")
        return 0
    d, delta = verdict.witness
    print("equilibrium: false")
    print(f"witness: agent {d.agent} swaps {{{d.agent},{d.drop}}} -> "
          f"{{{d.agent},{d.add}}} (cost delta {delta})")
    return 1


def _cmd_analyze(args) -> int:
    g = _load_graph(args.input, args.format)
    payload: dict = {
        "tool_version": __version__,
        "graph6": encode_graph6(g),
        "n": g.n,
        "m": g.m,
        "connected": kernels.is_connected(g.adj),
        "diameter": diameter(g),
    }
    bip = is_bipartite(g)
    payload["bipartite"] = bip.bipartite
    if bip.bipartite:
        payload["sides"] = [sorted(s) for s in bip.sides]
    else:
        payload["odd_walk"] = list(bip.odd_walk)
    if payload["connected"]:
        cls = classify(g)
        dec = decompose(g)
        payload["classes"] = {
            "tree": cls.tree,
            "star": cls.star,
            "complete_bipartite": list(cls.complete_bipartite)
            if cls.complete_bipartite else None,
            "block_graph": cls.block_graph,
            "cactus": cls.cactus,
        }
        payload["bridges"] = [list(e) for e in dec.bridges]
        payload["cut_vertices"] = sorted(dec.cut_vertices)
        payload["two_edge_connected_components"] = [sorted(t) for t in dec.tecc]
        payload["biconnected_components"] = [sorted(map(list, b)) for b in dec.bcc]
        payload["pendant_worlds"] = [
            {
                "component": sorted(t),
                "worlds": {str(u): sorted(pendant_world(g, t, u)) for u in sorted(t)},
            }
            for t in dec.tecc
            if len(t) >= 3
        ]
    _emit(ReportDocument("1", payload), "json", args.out)
    return 0


def _cmd_theory(args) -> int:
    g = _load_graph(args.input, args.format)
    if not kernels.is_connected(g.adj):
        raise CliError("theory requires a connected graph")
    cyclic = [t for t in decompose(g).tecc if len(t) >= 3]
    if not cyclic:
        raise CliError("no cyclic 2-edge-connected component to analyse")
    if not 0 <= args.component < len(cyclic):
        raise CliError(
            f"component index {args.component} out of range 0..{len(cyclic) - 1}")
    comp = cyclic[args.component]
    bip = kernels.bipartite_side(g.adj) >= 0

    if args.observer == "all":
        observers = list(range(g.n))
    else:
        try:
            observers = [int(args.observer)]
        except ValueError:
            raise CliError(f"--observer must be a vertex id or 'all'") from None
        if not 0 <= observers[0] < g.n:
            raise CliError(f"observer {observers[0]} out of range")

    agg = aggregate_swaps(g, comp)
    payload: dict = {
        "tool_version": __version__,
        "graph6": encode_graph6(g),
        "component": sorted(comp),
        "component_diameter": component_diameter(g, comp),
        "bipartite": bip,
    }
    if not bip:
        payload["warning"] = (
            "graph is not bipartite: closed-form columns and inequality "
            "reports are unavailable; simulated values are shown")

    rows = []
    for w in observers:
        for (ww, u, v), val in sorted(agg.shifts.items()):
            if ww != w:
                continue
            row = {"observer": w, "agent": u, "dropped": v, "simulated": val}
            if bip:
                row["closed_form"] = closed_form_shift(g, comp, w, u, v)
            rows.append(row)
    payload["shifts"] = rows
    payload["per_observer"] = {str(w): agg.per_observer[w] for w in observers}
    payload["total"] = agg.total

    if bip:
        payload["inequalities"] = []
        for w in observers:
            rep = check_inequalities(g, comp, w, agg)
            payload["inequalities"].append({
                "observer": w,
                "down_mass": rep.down_mass,
                "z_count": rep.z_count,
                "down_tight": rep.down_tight,
                "up_mass": rep.up_mass,
                "single_down_count": rep.single_down_count,
                "up_tight": rep.up_tight,
                "formula_total": rep.formula_total,
                "observer_total": rep.observer_total,
                "bound": rep.bound,
                "final_bound_holds": rep.final_bound_holds,
            })
        wit = strict_witness(g, comp)
        payload["strict_witness"] = (
            None if wit is None
            else {"observer": wit.observer, "shift_total": wit.shift_total})
    _emit(ReportDocument("1", payload), "json", args.out)
    return 0


def _cmd_dynamics(args) -> int:
    g = _load_graph(args.input, args.format)
    if not kernels.is_connected(g.adj):
        raise CliError("dynamics requires a connected graph")
    trace = run_dynamics(g, args.max_steps)
    for i, move in enumerate(trace.moves):
        print(f"step {i + 1}: agent {move.agent} swaps "
              f"{{{move.agent},{move.drop}}} -> {{{move.agent},{move.add}}}")
    print(f"outcome: {trace.outcome} after {len(trace.moves)} moves")
    print(f"final diameter: {diameter(trace.states[-1])}")
    return 0


def _cmd_survey(args) -> int:
    claims = tuple(CLAIM_NAMES) if args.claims == "all" else tuple(
        c.strip() for c in args.claims.split(",") if c.strip())
    for c in claims:
        if c not in CLAIM_NAMES:
            raise CliError(f"unknown claim {c!r}; known: {', '.join(CLAIM_NAMES)}")
    if (args.n is None) == (args.g6 is None):
        raise CliError("survey needs exactly one of --n or --g6")
    if args.n == 8 and not args.allow_n8:
        raise CliError(
            "--n 8 scans 2^28 edge masks (minutes to hours); "
            "pass --allow-n8 to confirm")
    lines = None
    if args.g6 is not None:
        try:
            lines = tuple(Path(args.g6).read_text().splitlines())
        except OSError as err:
            raise CliError(f"cannot read {args.g6}: {err}") from err
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get("SWAPEQ_WORKERS", "1"))
    config = SurveyConfig(
        n=args.n,
        graph6_lines=lines,
        claims=claims,
        dedup=args.dedup,
        workers=workers,
        progress=args.progress or args.n == 8,
    )
    try:
        result = run_survey(config)
    except (SurveyConfigError, GraphError, ValueError) as err:
        raise CliError(str(err)) from err
    _emit(survey_report(result, config), args.format, args.out)
    return 0 if not result.summary.violations else 1


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="swapeq",
        description="Swap-equilibrium analysis of small graphs")
    top.add_argument("--version", action="version", version=f"swapeq {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="graph file (graph6 or edge list)")
        p.add_argument("--format", choices=("g6", "edges"), default=None,
                       help="input format (default: by extension, .g6 = graph6)")
        p.add_argument("--out", default=None, help="write the report to a file")

    p = sub.add_parser("check", help="equilibrium verdict; exit 0 iff equilibrium")
    add_input(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("analyze", help="structural JSON report")
    add_input(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("theory", help="swap-cost tables for one component")
    add_input(p)
    p.add_argument("--component", type=int, default=0,
                   help="index into the cyclic components (default 0)")
    p.add_argument("--observer", default="all", help="vertex id or 'all'")
    p.set_defaults(func=_cmd_theory)

    p = sub.add_parser("dynamics", help="best-response dynamics trace")
    add_input(p)
    p.add_argument("--max-steps", type=int, default=1000)
    p.set_defaults(func=_cmd_dynamics)

    p = sub.add_parser("survey", help="exhaustive sweep with claim checks")
    p.add_argument("--n", type=int, default=None, help="vertex count (3..8)")
    p.add_argument("--g6", default=None, help="graph6 file, one graph per line")
    p.add_argument("--claims", default="all",
                   help="comma-separated claim list (default all)")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default $SWAPEQ_WORKERS or 1)")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--dedup", action="store_true",
                   help="summarise equilibrium isomorphism classes")
    p.add_argument("--progress", action="store_true")
    p.add_argument("--allow-n8", action="store_true",
                   help="confirm the long-running n=8 scan")
    p.set_defaults(func=_cmd_survey)

    return top


def run(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code
    except (GraphError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
