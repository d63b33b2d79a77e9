"""Builders for the named graph families.

Vertex layout conventions (stable, so graph6 fixtures do not drift):

* cycle / path: vertices 0..n-1 in traversal order; star: centre 0.
* tadpole, h1: cycle on 0..g-1 with the hub at 0, then long paths in order,
  then single pendant vertices last.
* pineapple, clique_with_pendants: clique on 0..q-1 (hub 0), pendants
  appended clique vertex by clique vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, GraphError


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def tadpole(n: int, g: int) -> Graph:
    """Cycle ``C_g`` with a pendant path on ``n - g`` extra vertices hung from vertex 0."""
    if not 3 <= g <= n:
        raise GraphError(f"tadpole needs 3 <= g <= n, got n={n}, g={g}")
    edges = [(i, (i + 1) % g) for i in range(g)]
    prev = 0
    for v in range(g, n):
        edges.append((prev, v))
        prev = v
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class H1Params:
    """Unicyclic graph with one hub on the cycle.

    The hub carries ``k`` pendant edges and ``l`` pendant paths of length at
    least two.
    """

    n: int
    g: int
    k: int
    l: int

    def __post_init__(self):
        n, g, k, l = self.n, self.g, self.k, self.l
        if g < 3 or k < 0 or l < 0:
            raise GraphError(f"infeasible H1 parameters {self}")
        if n < g + k + 2 * l:
            raise GraphError(f"n={n} too small for g={g}, k={k}, l={l}")
        if l == 0 and n != g + k:
            raise GraphError("with no long paths every non-cycle vertex is a pendant")
        if n > g and k + l < 1:
            raise GraphError("n > g requires at least one pendant path")

    @property
    def hub_degree(self) -> int:
        return self.k + self.l + 2


def h1_feasible(n: int, g: int) -> list[H1Params]:
    """Every feasible ``(k, l)`` for fixed order and girth."""
    out = []
    for l in range(0, (n - g) // 2 + 1):
        for k in range(0, n - g - 2 * l + 1):
            try:
                out.append(H1Params(n, g, k, l))
            except GraphError:
                pass
    return out


def h1(params: H1Params, long_path_lengths: Optional[Sequence[int]] = None) -> Graph:
    """Build the hub graph; surplus vertices all go on the first long path.

    ``long_path_lengths`` (edges per long path, each >= 2, summing to
    ``n - g - k``) overrides that placement.
    """
    n, g, k, l = params.n, params.g, params.k, params.l
    spare = n - g - k
    if long_path_lengths is None:
        long_path_lengths = [spare - 2 * (l - 1)] + [2] * (l - 1) if l else []
    lengths = list(long_path_lengths)
    if len(lengths) != l or any(x < 2 for x in lengths) or sum(lengths) != spare:
        raise GraphError(f"long path lengths {lengths} do not fit {params}")

    edges = [(i, (i + 1) % g) for i in range(g)]
    v = g
    for length in lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, v))
            prev = v
            v += 1
    for _ in range(k):
        edges.append((0, v))
        v += 1
    return Graph.from_edges(n, edges)


def pineapple(n: int, p: int) -> Graph:
    """``K_{n-p}`` with ``p`` pendant vertices on clique vertex 0."""
    if not (0 <= p <= n - 1):
        raise GraphError(f"pineapple needs 0 <= p <= n - 1, got n={n}, p={p}")
    return clique_with_pendants([p] + [0] * (n - p - 1), allow_single=True)


def clique_with_pendants(a: Sequence[int], allow_single: bool = False) -> Graph:
    """``K_q`` (``q = len(a)``) with ``a[i]`` pendant vertices on clique vertex ``i``."""
    a = list(a)
    if any(x < 0 for x in a):
        raise GraphError(f"pendant counts must be non-negative: {a}")
    if len(a) < (1 if allow_single else 2):
        raise GraphError("need at least two clique vertices")
    q = len(a)
    n = q + sum(a)
    edges = [(i, j) for j in range(q) for i in range(j)]
    v = q
    for i, count in enumerate(a):
        for _ in range(count):
            edges.append((i, v))
            v += 1
    return Graph.from_edges(n, edges)
