#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot operations the survey leans on: connectivity + scan of
every edge mask, single-source distance sums, and full equilibrium checks,
over all labeled connected graphs on --n vertices.

Usage:
    python benchmarks/bench_kernels.py [--n 6]
"""

from __future__ import annotations

import argparse
import time

from swapeq import _kernels_py

try:
    from swapeq import _fastkernels
except ImportError:
    _fastkernels = None


def bench_backend(impl, n: int) -> dict[str, float]:
    total = 1 << (n * (n - 1) // 2)
    out = {}

    t0 = time.perf_counter()
    scanned = impl.scan_masks(n, 0, total)
    out["scan_masks (full survey pass)"] = time.perf_counter() - t0

    # reconstruct adjacency lists once, outside the timed sections
    from swapeq.kernels import mask_to_adj

    graphs = [mask_to_adj(n, mask) for mask, _, _, _ in scanned]

    t0 = time.perf_counter()
    acc = 0
    for adj in graphs:
        acc += impl.sum_dist(adj, 0)
    out[f"sum_dist over {len(graphs)} graphs"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    eq = 0
    for adj in graphs:
        if impl.first_improving_swap(adj) is None:
            eq += 1
    out[f"equilibrium check over {len(graphs)} graphs"] = time.perf_counter() - t0

    out["_graphs"] = len(graphs)
    out["_equilibria"] = eq
    return out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6, choices=range(3, 8))
    args = ap.parse_args()

    results = {"pure-python": bench_backend(_kernels_py, args.n)}
    if _fastkernels is not None:
        results["compiled"] = bench_backend(_fastkernels, args.n)
    else:
        print("compiled kernels not built; showing pure-python only")

    names = [k for k in results["pure-python"] if not k.startswith("_")]
    print(f"\nn = {args.n}: {results['pure-python']['_graphs']} connected graphs, "
          f"{results['pure-python']['_equilibria']} equilibria\n")
    width = max(len(s) for s in names)
    header = f"{'operation':<{width}}  " + "".join(f"{b:>14}" for b in results)
    print(header)
    print("-" * len(header))
    for name in names:
        row = f"{name:<{width}}  "
        for backend in results:
            row += f"{results[backend][name]:>13.3f}s"
        print(row)
    if _fastkernels is not None:
        print()
        for name in names:
            ratio = results["pure-python"][name] / results["compiled"][name]
            print(f"speedup {ratio:5.1f}x  {name}")


if __name__ == "__main__":
    main()
