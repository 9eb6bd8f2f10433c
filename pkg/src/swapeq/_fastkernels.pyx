# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels (Cython twin of _kernels_py).

Same contracts as the pure module: adjacency rows are per-vertex neighbour
bitmasks, n <= 64, -1 is the unreachable sentinel.
"""

from libc.stdint cimport uint64_t

BACKEND = "compiled"

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _load(object adj, uint64_t *rows) except -1:
    cdef int n = len(adj)
    cdef int i
    if n > 64:
        raise ValueError("kernels support at most 64 vertices")
    for i in range(n):
        rows[i] = <uint64_t> adj[i]
    return n


cdef inline long _sum_dist_c(uint64_t *rows, int n, int src) nogil:
    cdef uint64_t full = (<uint64_t> 1 << n) - 1 if n < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    cdef uint64_t seen = <uint64_t> 1 << src
    cdef uint64_t frontier = seen
    cdef uint64_t nxt, f
    cdef long total = 0
    cdef long d = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= rows[__builtin_ctzll(f)]
            f &= f - 1
        nxt &= ~seen
        if nxt == 0:
            break
        d += 1
        total += d * __builtin_popcountll(nxt)
        seen |= nxt
        frontier = nxt
    return total if seen == full else -1


cdef inline long _ecc_c(uint64_t *rows, int n, int src) nogil:
    cdef uint64_t full = (<uint64_t> 1 << n) - 1 if n < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    cdef uint64_t seen = <uint64_t> 1 << src
    cdef uint64_t frontier = seen
    cdef uint64_t nxt, f
    cdef long d = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= rows[__builtin_ctzll(f)]
            f &= f - 1
        nxt &= ~seen
        if nxt == 0:
            break
        d += 1
        seen |= nxt
        frontier = nxt
    return d if seen == full else -1


cdef inline bint _connected_c(uint64_t *rows, int n) nogil:
    cdef uint64_t full = (<uint64_t> 1 << n) - 1 if n < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    cdef uint64_t seen = 1, frontier = 1, nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= rows[__builtin_ctzll(f)]
            f &= f - 1
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == full


cdef inline int _bipartite_side_c(uint64_t *rows, int n, uint64_t *side_out) nogil:
    # 0 with *side_out set on success, -1 if an odd cycle exists
    cdef uint64_t seen_all = 0, side1 = 0
    cdef uint64_t level, seen, nxt, f, a
    cdef int s, col
    for s in range(n):
        if seen_all >> s & 1:
            continue
        level = <uint64_t> 1 << s
        seen = level
        col = 0
        while level:
            nxt = 0
            f = level
            while f:
                a = rows[__builtin_ctzll(f)]
                if a & level:
                    return -1
                nxt |= a
                f &= f - 1
            if col:
                side1 |= level
            nxt &= ~seen
            seen |= nxt
            col ^= 1
            level = nxt
        seen_all |= seen
    side_out[0] = side1
    return 0


cdef inline long _swapped_sum_dist_c(uint64_t *rows, int n, int u, int v, int vp) nogil:
    cdef uint64_t tmp[64]
    cdef int i
    for i in range(n):
        tmp[i] = rows[i]
    tmp[u] = (tmp[u] & ~(<uint64_t> 1 << v)) | (<uint64_t> 1 << vp)
    tmp[v] &= ~(<uint64_t> 1 << u)
    tmp[vp] |= <uint64_t> 1 << u
    return _sum_dist_c(tmp, n, u)


cdef _first_improving_c(uint64_t *rows, int n):
    cdef uint64_t full = (<uint64_t> 1 << n) - 1 if n < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    cdef uint64_t nbrs, others, f, g
    cdef int u, v, vp
    cdef long d0, d1
    for u in range(n):
        nbrs = rows[u]
        others = full & ~nbrs & ~(<uint64_t> 1 << u)
        if nbrs == 0 or others == 0:
            continue
        d0 = _sum_dist_c(rows, n, u)
        f = nbrs
        while f:
            v = __builtin_ctzll(f)
            f &= f - 1
            g = others
            while g:
                vp = __builtin_ctzll(g)
                g &= g - 1
                d1 = _swapped_sum_dist_c(rows, n, u, v, vp)
                if 0 <= d1 < d0:
                    return (u, v, vp, d1 - d0)
    return None


def bfs_dists(adj, int src):
    """Hop distances from src; -1 where unreachable."""
    cdef uint64_t rows[64]
    cdef int n = _load(adj, rows)
    cdef uint64_t seen = <uint64_t> 1 << src
    cdef uint64_t frontier = seen
    cdef uint64_t nxt, f
    cdef int d = 0
    dist = [-1] * n
    dist[src] = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= rows[__builtin_ctzll(f)]
            f &= f - 1
        nxt &= ~seen
        if nxt == 0:
            break
        d += 1
        f = nxt
        while f:
            dist[__builtin_ctzll(f)] = d
            f &= f - 1
        seen |= nxt
        frontier = nxt
    return dist


def sum_dist(adj, int src):
    """Sum of hop distances from src to every vertex; -1 if any unreachable."""
    cdef uint64_t rows[64]
    cdef int n = _load(adj, rows)
    return _sum_dist_c(rows, n, src)


def is_connected(adj):
    cdef uint64_t rows[64]
    cdef int n = _load(adj, rows)
    return bool(_connected_c(rows, n))


def eccentricity(adj, int src):
    """Max hop distance from src; -1 if some vertex is unreachable."""
    cdef uint64_t rows[64]
    cdef int n = _load(adj, rows)
    return _ecc_c(rows, n, src)


def diameter(adj):
    """Max pairwise distance; -1 if disconnected; 0 for a single vertex."""
    cdef uint64_t rows[64]
    cdef int n = _load(adj, rows)
    cdef long best = 0, e
    cdef int src
    for src in range(n):
        e = _ecc_c(rows, n, src)
        if e < 0:
            return -1
        if e > best:
            best = e
    return best


def bipartite_side(adj):
    """One side of a 2-colouring as a bitmask, or -1 if an odd cycle exists."""
    cdef uint64_t rows[64]
    cdef int n = _load(adj, rows)
    cdef uint64_t side = 0
    if _bipartite_side_c(rows, n, &side) < 0:
        return -1
    return side


def swapped_sum_dist(adj, int u, int v, int vp):
    """sum_dist from u after replacing edge {u,v} by {u,vp} (set semantics)."""
    cdef uint64_t rows[64]
    cdef int n = _load(adj, rows)
    return _swapped_sum_dist_c(rows, n, u, v, vp)


def first_improving_swap(adj):
    """First (u, v, vp, delta) in lexicographic (u, v, vp) order with delta < 0."""
    cdef uint64_t rows[64]
    cdef int n = _load(adj, rows)
    return _first_improving_c(rows, n)


def best_swap(adj):
    """Swap minimising (delta, u, v, vp); None unless some delta < 0."""
    cdef uint64_t rows[64]
    cdef int n = _load(adj, rows)
    cdef uint64_t full = (<uint64_t> 1 << n) - 1 if n < 64 else <uint64_t> 0xFFFFFFFFFFFFFFFF
    cdef uint64_t nbrs, others, f, g
    cdef int u, v, vp
    cdef long d0, d1, delta
    cdef long best_delta = 0
    cdef int bu = -1, bv = -1, bvp = -1
    for u in range(n):
        nbrs = rows[u]
        others = full & ~nbrs & ~(<uint64_t> 1 << u)
        if nbrs == 0 or others == 0:
            continue
        d0 = _sum_dist_c(rows, n, u)
        f = nbrs
        while f:
            v = __builtin_ctzll(f)
            f &= f - 1
            g = others
            while g:
                vp = __builtin_ctzll(g)
                g &= g - 1
                d1 = _swapped_sum_dist_c(rows, n, u, v, vp)
                if d1 >= 0:
                    delta = d1 - d0
                    if delta < best_delta:
                        best_delta = delta
                        bu = u
                        bv = v
                        bvp = vp
    if bu < 0:
        return None
    return (best_delta, bu, bv, bvp)


def scan_masks(int n, object lo, object hi):
    """Survey scan over edge masks in [lo, hi); see the pure twin for format."""
    cdef uint64_t rows[64]
    cdef int pair_i[2016]
    cdef int pair_j[2016]
    cdef int k = 0, i, j
    cdef unsigned long long mask, m, start = lo, stop = hi
    cdef int bit
    cdef bint bip
    cdef uint64_t side = 0
    for i in range(n):
        for j in range(i + 1, n):
            pair_i[k] = i
            pair_j[k] = j
            k += 1
    out = []
    mask = start
    while mask < stop:
        for i in range(n):
            rows[i] = 0
        m = mask
        while m:
            bit = __builtin_ctzll(m)
            m &= m - 1
            rows[pair_i[bit]] |= <uint64_t> 1 << pair_j[bit]
            rows[pair_j[bit]] |= <uint64_t> 1 << pair_i[bit]
        if _connected_c(rows, n):
            bip = _bipartite_side_c(rows, n, &side) == 0
            wit = _first_improving_c(rows, n)
            out.append((mask, bip, wit is None, wit))
        mask += 1
    return out
