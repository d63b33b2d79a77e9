"""Immutable simple graphs stored as per-vertex adjacency bitmasks.

Vertex ``i`` has row ``rows[i]``; bit ``j`` of that row is set iff ``ij`` is an
edge. Orders are capped at 64 so every row fits one machine word.

Labeled graphs are also addressed by an *edge mask*: bit ``b`` of the mask is
the pair ``(i, j)``, ``i < j``, with ``b = j*(j-1)//2 + i``. This is the
column-major upper-triangle order used by graph6, so the mask bits are the
graph6 body bits read in order.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

MAX_ORDER = 64
ISO_MAX_ORDER = 12


class GraphError(ValueError):
    """Invalid graph construction or query."""


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs of ``K_n`` in edge-mask bit order."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be in [1, {MAX_ORDER}], got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError("one adjacency row per vertex required")
        full = (1 << self.n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full:
                raise GraphError(f"row {i} references a vertex >= n")
            if r >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            rest = r
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not self.rows[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency at ({i}, {j})")
                rest ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order must be in [1, {MAX_ORDER}], got {n}")
        rows = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge ({i}, {j}) out of range for n={n}")
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if rows[i] >> j & 1:
                raise GraphError(f"duplicate edge ({i}, {j})")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        rows = [0] * n
        for b, (i, j) in enumerate(edge_pairs(n)):
            if mask >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        if mask >> len(edge_pairs(n)):
            raise GraphError("edge mask has bits beyond C(n, 2)")
        return cls(n, tuple(rows))

    def to_mask(self) -> int:
        mask = 0
        for b, (i, j) in enumerate(edge_pairs(self.n)):
            if self.rows[i] >> j & 1:
                mask |= 1 << b
        return mask

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, i: int, j: int) -> bool:
        self._check_vertex(i)
        self._check_vertex(j)
        return bool(self.rows[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in edge-mask bit order."""
        return [(i, j) for i, j in edge_pairs(self.n) if self.rows[i] >> j & 1]

    def degree(self, i: int) -> int:
        self._check_vertex(i)
        return self.rows[i].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, i: int) -> list[int]:
        self._check_vertex(i)
        r = self.rows[i]
        return [j for j in range(self.n) if r >> j & 1]

    def add_edge(self, i: int, j: int) -> "Graph":
        self._check_vertex(i)
        self._check_vertex(j)
        if i == j:
            raise GraphError(f"loop at vertex {i}")
        if self.rows[i] >> j & 1:
            raise GraphError(f"duplicate edge ({i}, {j})")
        rows = list(self.rows)
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        return Graph(self.n, tuple(rows))

    def remove_edge(self, i: int, j: int) -> "Graph":
        if not self.has_edge(i, j):
            raise GraphError(f"no edge ({i}, {j})")
        rows = list(self.rows)
        rows[i] &= ~(1 << j)
        rows[j] &= ~(1 << i)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph.from_edges(self.n, ((perm[i], perm[j]) for i, j in self.edges()))

    def _check_vertex(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise GraphError(f"vertex {i} out of range for n={self.n}")


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def add_edge(g: Graph, i: int, j: int) -> Graph:
    return g.add_edge(i, j)


def degree(g: Graph, i: int) -> int:
    return g.degree(i)


def components(g: Graph) -> list[int]:
    """Vertex bitmask of each connected component."""
    left = (1 << g.n) - 1
    out = []
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= g.rows[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or ``None`` for a forest.

    Runs a BFS from every vertex; a non-tree edge ``uw`` seen from root ``s``
    closes a closed walk of length ``dist[u] + dist[w] + 1`` through ``s``,
    and the minimum over all roots is the girth.
    """
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def pendant_count(g: Graph) -> int:
    return sum(1 for d in g.degrees() if d == 1)


def is_unicyclic(g: Graph) -> bool:
    return g.m == g.n and is_connected(g)


def fingerprint(g: Graph) -> tuple:
    """Isomorphism invariant: degree sequence, girth and edge degree pairs."""
    deg = g.degrees()
    pairs = sorted(tuple(sorted((deg[i], deg[j]))) for i, j in g.edges())
    return (g.n, tuple(sorted(deg)), girth(g), tuple(pairs))


def _refine(graphs: Sequence[Graph]) -> list[list[int]]:
    """Joint colour refinement, so colours are comparable across graphs."""
    colors = [g.degrees() for g in graphs]
    while True:
        palette: dict = {}
        new = []
        for g, col in zip(graphs, colors):
            sig = [(col[v], tuple(sorted(col[w] for w in g.neighbors(v)))) for v in range(g.n)]
            new.append(sig)
        for sig in sorted({s for sig in new for s in sig}):
            palette[sig] = len(palette)
        new = [[palette[s] for s in sig] for sig in new]
        if len(palette) == len({c for col in colors for c in col}):
            return new
        colors = new


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Decide isomorphism by colour refinement plus backtracking.

    Both graphs must have order at most ``ISO_MAX_ORDER``.
    """
    if max(g.n, h.n) > ISO_MAX_ORDER:
        raise GraphError(f"isomorphism test supports order <= {ISO_MAX_ORDER}")
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    cg, ch = _refine([g, h])
    if Counter(cg) != Counter(ch):
        return False

    n = g.n
    cell_size = Counter(cg)
    # Smallest colour cell first, then prefer vertices adjacent to ones already placed.
    order: list[int] = []
    placed = 0
    while len(order) < n:
        cands = [v for v in range(n) if not placed >> v & 1]
        v = min(cands, key=lambda v: (not g.rows[v] & placed, cell_size[cg[v]], v))
        order.append(v)
        placed |= 1 << v

    image = [-1] * n
    used = [False] * n

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        for u in range(n):
            if used[u] or ch[u] != cg[v]:
                continue
            if any(
                (g.rows[v] >> x & 1) != (h.rows[u] >> image[x] & 1)
                for x in order[:depth]
            ):
                continue
            image[v] = u
            used[u] = True
            if extend(depth + 1):
                return True
            used[u] = False
        image[v] = -1
        return False

    return extend(0)
