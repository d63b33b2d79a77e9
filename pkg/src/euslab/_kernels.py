"""Compiled inner loops for exhaustive scans over edge masks.

Masks use the column-major pair order of ``graph.edge_pairs``. Filter
parameters are packed into an int64 array indexed by the ``F_*`` constants,
with -1 meaning "unconstrained".
"""

import numpy as np
from numba import njit

F_CONNECTED = 0
F_UNICYCLIC = 1
F_GIRTH = 2
F_PENDANTS = 3
F_MAX_DEGREE = 4
F_EDGES = 5
N_FILTER = 6


@njit(cache=True, nogil=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True, nogil=True)
def _next_combination(x):
    # Gosper's hack: next larger integer with the same popcount.
    c = x & -x
    r = x + c
    return (((r ^ x) >> 2) // c) | r


@njit(cache=True, nogil=True)
def _load(mask, n, pu, pv, nbits, rows, deg):
    for v in range(n):
        rows[v] = 0
    for b in range(nbits):
        if (mask >> b) & 1:
            rows[pu[b]] |= np.int64(1) << pv[b]
            rows[pv[b]] |= np.int64(1) << pu[b]
    for v in range(n):
        deg[v] = _popcount(rows[v])


@njit(cache=True, nogil=True)
def _connected(rows, n):
    full = (np.int64(1) << n) - 1
    seen = np.int64(1)
    frontier = np.int64(1)
    while frontier:
        nxt = np.int64(0)
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


@njit(cache=True, nogil=True)
def _cycle_length_unicyclic(rows, n):
    # Strip leaves until only the cycle is left.
    core = (np.int64(1) << n) - 1
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if (core >> v) & 1 and _popcount(rows[v] & core) <= 1:
                core &= ~(np.int64(1) << v)
                changed = True
    return _popcount(core)


@njit(cache=True, nogil=True)
def _girth(rows, n, dist, parent, queue):
    best = 1 << 30
    for s in range(n):
        for v in range(n):
            dist[v] = -1
        dist[s] = 0
        parent[s] = -1
        head = 0
        tail = 1
        queue[0] = s
        while head < tail:
            u = queue[head]
            head += 1
            if 2 * dist[u] + 1 >= best:
                break
            r = rows[u]
            for w in range(n):
                if not (r >> w) & 1:
                    continue
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if length < best:
                        best = length
    return -1 if best == 1 << 30 else best


@njit(cache=True, nogil=True)
def _passes(n, m, filt, rows, deg, dist, parent, queue):
    if filt[F_EDGES] >= 0 and m != filt[F_EDGES]:
        return False
    if filt[F_MAX_DEGREE] >= 0:
        for v in range(n):
            if deg[v] > filt[F_MAX_DEGREE]:
                return False
    if filt[F_PENDANTS] >= 0:
        leaves = 0
        for v in range(n):
            if deg[v] == 1:
                leaves += 1
        if leaves != filt[F_PENDANTS]:
            return False
    need_conn = filt[F_CONNECTED] > 0 or filt[F_UNICYCLIC] > 0
    if need_conn:
        if m < n - 1 or not _connected(rows, n):
            return False
    if filt[F_UNICYCLIC] > 0 and m != n:
        return False
    if filt[F_GIRTH] >= 0:
        if need_conn and m == n:
            gval = _cycle_length_unicyclic(rows, n)
        elif need_conn and m == n - 1:
            gval = -1
        else:
            gval = _girth(rows, n, dist, parent, queue)
        if gval != filt[F_GIRTH]:
            return False
    return True


@njit(cache=True, nogil=True)
def collect_range(n, pu, pv, lo, hi, combo, filt, cap):
    """Masks in ``[lo, hi)`` passing the filter, ascending; stops at ``cap`` hits.

    With ``combo`` set only masks of popcount ``filt[F_EDGES]`` are visited and
    ``lo`` must already have that popcount. Returns (visited, hits, next_mask).
    """
    nbits = pu.shape[0]
    rows = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    dist = np.zeros(n, np.int64)
    parent = np.zeros(n, np.int64)
    queue = np.zeros(n, np.int64)
    out = np.empty(cap, np.int64)
    limit = np.int64(1) << nbits
    visited = 0
    found = 0
    x = lo
    while x < hi and x < limit and found < cap:
        visited += 1
        _load(x, n, pu, pv, nbits, rows, deg)
        m = 0
        for v in range(n):
            m += deg[v]
        m //= 2
        if _passes(n, m, filt, rows, deg, dist, parent, queue):
            out[found] = x
            found += 1
        if combo:
            if x == 0:
                break
            x = _next_combination(x)
        else:
            x += 1
    return visited, out[:found], x


@njit(cache=True, nogil=True)
def scan_range(n, pu, pv, lo, hi, combo, filt, table, sign, eps):
    """Extremal reduction over masks in ``[lo, hi)``.

    Minimises ``sign * index``. Witness masks are kept only for labelings
    whose degree sequence is non-increasing in vertex order (every
    isomorphism class has one), with everything within ``eps`` of the running
    optimum retained. Returns (visited, matched, best, optimal_labelings,
    witness_masks, witness_values).
    """
    nbits = pu.shape[0]
    rows = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    dist = np.zeros(n, np.int64)
    parent = np.zeros(n, np.int64)
    queue = np.zeros(n, np.int64)
    cap = 64
    wmask = np.empty(cap, np.int64)
    wval = np.empty(cap, np.float64)
    nwit = 0
    best = np.inf
    opt_count = 0
    limit = np.int64(1) << nbits
    visited = 0
    matched = 0
    x = lo
    while x < hi and x < limit:
        visited += 1
        _load(x, n, pu, pv, nbits, rows, deg)
        m = 0
        for v in range(n):
            m += deg[v]
        m //= 2
        if _passes(n, m, filt, rows, deg, dist, parent, queue):
            matched += 1
            total = 0.0
            for b in range(nbits):
                if (x >> b) & 1:
                    total += table[deg[pu[b]], deg[pv[b]]]
            key = sign * total
            if key < best - eps:
                best = key
                nwit = 0
                opt_count = 0
            if key <= best + eps:
                if key < best:
                    best = key
                opt_count += 1
                sorted_deg = True
                for v in range(n - 1):
                    if deg[v] < deg[v + 1]:
                        sorted_deg = False
                        break
                if sorted_deg:
                    if nwit == cap:
                        # Drop entries that fell out of the tie window, then grow.
                        k = 0
                        for t in range(nwit):
                            if wval[t] <= best + eps:
                                wmask[k] = wmask[t]
                                wval[k] = wval[t]
                                k += 1
                        nwit = k
                        if nwit > cap // 2:
                            cap *= 2
                            nm = np.empty(cap, np.int64)
                            nv = np.empty(cap, np.float64)
                            nm[:nwit] = wmask[:nwit]
                            nv[:nwit] = wval[:nwit]
                            wmask = nm
                            wval = nv
                    wmask[nwit] = x
                    wval[nwit] = key
                    nwit += 1
        if combo:
            if x == 0:
                break
            x = _next_combination(x)
        else:
            x += 1
    return visited, matched, best, opt_count, wmask[:nwit].copy(), wval[:nwit].copy()
