"""Parity between the pure-Python kernels and the compiled extension."""

import random

import pytest

from swapeq import _kernels_py
from swapeq.kernels import mask_to_adj

fast = pytest.importorskip(
    "swapeq._fastkernels", reason="compiled kernels not built")


def random_adjs(seed, count, max_n=9):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        mask = rng.getrandbits(n * (n - 1) // 2)
        out.append(mask_to_adj(n, mask))
    return out


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_bfs_and_sums(seed):
    for adj in random_adjs(seed, 200):
        n = len(adj)
        for src in range(n):
            assert fast.bfs_dists(adj, src) == _kernels_py.bfs_dists(adj, src)
            assert fast.sum_dist(adj, src) == _kernels_py.sum_dist(adj, src)
            assert fast.eccentricity(adj, src) == _kernels_py.eccentricity(adj, src)


@pytest.mark.parametrize("seed", [4, 5])
def test_global_properties(seed):
    for adj in random_adjs(seed, 300):
        assert fast.is_connected(adj) == _kernels_py.is_connected(adj)
        assert fast.diameter(adj) == _kernels_py.diameter(adj)
        assert fast.bipartite_side(adj) == _kernels_py.bipartite_side(adj)


@pytest.mark.parametrize("seed", [6, 7])
def test_swaps(seed):
    rng = random.Random(seed)
    for adj in random_adjs(seed, 150, max_n=8):
        if not _kernels_py.is_connected(adj):
            continue
        assert fast.first_improving_swap(adj) == _kernels_py.first_improving_swap(adj)
        assert fast.best_swap(adj) == _kernels_py.best_swap(adj)
        n = len(adj)
        for _ in range(5):
            u = rng.randrange(n)
            if not adj[u]:
                continue
            nbrs = [v for v in range(n) if adj[u] >> v & 1]
            others = [v for v in range(n) if v != u and not adj[u] >> v & 1]
            if not others:
                continue
            v, vp = rng.choice(nbrs), rng.choice(others)
            assert fast.swapped_sum_dist(adj, u, v, vp) == \
                _kernels_py.swapped_sum_dist(adj, u, v, vp)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_scan_masks_full(n):
    total = 1 << (n * (n - 1) // 2)
    assert fast.scan_masks(n, 0, total) == _kernels_py.scan_masks(n, 0, total)


def test_scan_masks_subrange():
    assert fast.scan_masks(6, 5000, 9000) == _kernels_py.scan_masks(6, 5000, 9000)


def test_backend_names():
    assert _kernels_py.BACKEND == "pure-python"
    assert fast.BACKEND == "compiled"


def test_large_vertex_count_guard():
    with pytest.raises(ValueError):
        fast.sum_dist([0] * 65, 0)
