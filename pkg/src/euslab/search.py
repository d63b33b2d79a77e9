"""Exhaustive enumeration of labeled graphs and extremal scans over a class.

Scans walk edge masks in ascending order. With an edge-count constraint only
masks of that popcount are visited (combination scan); otherwise every mask
in ``[0, 2^C(n,2))`` is. The mask space is cut into contiguous shards by
high-bit prefix; each shard reduces independently and shards merge in a
fixed order, so results do not depend on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable, Iterator, Optional

import numpy as np

from . import _kernels as K
from .graph import Graph, GraphError, are_isomorphic, edge_pairs, fingerprint
from .graph6 import emit_graph6
from .indices import EPS, IndexKind, weight_table

SCAN_CAP = 2**36
FULL_SCAN_MAX_N = 9
COMBO_SCAN_MAX_N = 10


class ScanError(RuntimeError):
    """Scan refused: size cap exceeded or empty class."""


@dataclass(frozen=True)
class EnumFilter:
    connected: bool = False
    unicyclic: bool = False
    girth: Optional[int] = None
    pendant_count: Optional[int] = None
    max_degree: Optional[int] = None
    edge_count: Optional[int] = None

    def __post_init__(self):
        if self.girth is not None and self.girth < 3:
            raise ValueError(f"girth filter needs g >= 3, got {self.girth}")
        if self.unicyclic and not self.connected:
            object.__setattr__(self, "connected", True)

    def effective_edge_count(self, n: int) -> Optional[int]:
        if self.unicyclic:
            if self.edge_count is not None and self.edge_count != n:
                raise ValueError("unicyclic graphs on n vertices have exactly n edges")
            return n
        return self.edge_count

    def packed(self, n: int) -> np.ndarray:
        f = np.full(K.N_FILTER, -1, dtype=np.int64)
        f[K.F_CONNECTED] = 1 if self.connected else -1
        f[K.F_UNICYCLIC] = 1 if self.unicyclic else -1
        for slot, value in (
            (K.F_GIRTH, self.girth),
            (K.F_PENDANTS, self.pendant_count),
            (K.F_MAX_DEGREE, self.max_degree),
            (K.F_EDGES, self.effective_edge_count(n)),
        ):
            if value is not None:
                f[slot] = value
        return f

    def matches(self, g: Graph) -> bool:
        """Pure-Python check of the same predicate, for re-validating witnesses."""
        from .graph import girth, is_connected, pendant_count

        n = g.n
        m_req = self.effective_edge_count(n)
        if m_req is not None and g.m != m_req:
            return False
        if self.max_degree is not None and max(g.degrees()) > self.max_degree:
            return False
        if self.pendant_count is not None and pendant_count(g) != self.pendant_count:
            return False
        if self.connected and not is_connected(g):
            return False
        if self.girth is not None and girth(g) != self.girth:
            return False
        return True

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v not in (None, False)}


@dataclass
class ExtremalReport:
    n: int
    filter: EnumFilter
    index: IndexKind
    direction: str
    optimum: float
    witnesses: list[Graph]
    scanned: int
    matched: int
    optimal_labelings: int
    iso_verified: bool = True
    shards: int = field(default=1, compare=False)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "filter": self.filter.to_dict(),
            "index": self.index.value,
            "direction": self.direction,
            "optimum": round(self.optimum, 12) + 0.0,
            "witnesses": [emit_graph6(w) for w in self.witnesses],
            "scanned": self.scanned,
            "matched": self.matched,
            "optimal_labelings": self.optimal_labelings,
            "iso_verified": self.iso_verified,
        }


def default_workers() -> int:
    env = os.environ.get("EUS_LAB_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = edge_pairs(n)
    pu = np.array([i for i, _ in pairs], dtype=np.int64)
    pv = np.array([j for _, j in pairs], dtype=np.int64)
    return pu, pv


def _first_with_popcount(lo: int, m: int) -> Optional[int]:
    """Smallest integer >= lo with exactly ``m`` set bits (None if ``m == 0 < lo``)."""
    if lo.bit_count() == m:
        return lo
    if m == 0:
        return None
    i = 0
    while True:
        if not lo >> i & 1:
            high = lo >> (i + 1)
            rest = m - high.bit_count() - 1
            if 0 <= rest <= i:
                return (high << (i + 1)) | (1 << i) | ((1 << rest) - 1)
        i += 1


def scan_size(n: int, filt: EnumFilter) -> int:
    nbits = n * (n - 1) // 2
    m = filt.effective_edge_count(n)
    return comb(nbits, m) if m is not None else 2**nbits


def _check_caps(n: int, filt: EnumFilter) -> None:
    if n < 1:
        raise ScanError(f"order must be >= 1, got {n}")
    combo = filt.effective_edge_count(n) is not None
    max_n = COMBO_SCAN_MAX_N if combo else FULL_SCAN_MAX_N
    if n > max_n:
        raise ScanError(f"n={n} exceeds the {'combination' if combo else 'full'} scan limit {max_n}")
    if scan_size(n, filt) > SCAN_CAP:
        raise ScanError(f"scan of {scan_size(n, filt)} masks exceeds cap {SCAN_CAP}")


def _shards(n: int, count: int) -> list[tuple[int, int]]:
    nbits = n * (n - 1) // 2
    prefix = min(max(count - 1, 0).bit_length(), nbits)
    width = 1 << (nbits - prefix)
    return [(s * width, (s + 1) * width) for s in range(1 << prefix)]


def iter_masks(n: int, filt: EnumFilter, block: int = 1 << 14) -> Iterator[int]:
    """Edge masks of labeled graphs passing ``filt``, ascending."""
    _check_caps(n, filt)
    pu, pv = _pair_arrays(n)
    packed = filt.packed(n)
    m = filt.effective_edge_count(n)
    combo = m is not None
    hi = 1 << len(pu)
    x = 0
    if combo:
        if m > len(pu):
            return
        x = _first_with_popcount(0, m)
    while x < hi:
        _, hits, x = K.collect_range(n, pu, pv, x, hi, combo, packed, block)
        yield from (int(h) for h in hits)
        if combo and m == 0:
            break


def enumerate_graphs(
    n: int, filt: EnumFilter, visitor: Optional[Callable[[Graph], Optional[bool]]] = None
) -> int:
    """Call ``visitor`` on every matching labeled graph; returning ``False`` stops.

    Returns the number of graphs visited.
    """
    count = 0
    for mask in iter_masks(n, filt):
        count += 1
        if visitor is not None and visitor(Graph.from_mask(n, mask)) is False:
            break
    return count


def _scan_shard(n, pu, pv, lo, hi, filt, packed, table, sign):
    m = filt.effective_edge_count(n)
    combo = m is not None
    if combo:
        if m > len(pu):
            return 0, 0, np.inf, 0, np.empty(0, np.int64), np.empty(0)
        lo = _first_with_popcount(lo, m)
        if lo is None or lo >= hi:
            return 0, 0, np.inf, 0, np.empty(0, np.int64), np.empty(0)
    return K.scan_range(n, pu, pv, lo, hi, combo, packed, table, sign, EPS)


def dedup_isomorphic(graphs: list[Graph]) -> tuple[list[Graph], bool]:
    """One representative per isomorphism class: the one with the least graph6.

    Returns the representatives sorted by graph6 and whether every class
    decision was made by a full isomorphism test.
    """
    verified = True
    reps: dict[tuple, list[Graph]] = {}
    for g6, g in sorted((emit_graph6(g), g) for g in graphs):
        bucket = reps.setdefault(fingerprint(g), [])
        if g.n > 12:
            verified = False
            if not bucket:
                bucket.append(g)
            continue
        if not any(are_isomorphic(g, r) for r in bucket):
            bucket.append(g)
    out = [g for bucket in reps.values() for g in bucket]
    out.sort(key=emit_graph6)
    return out, verified


def extremal_scan(
    n: int,
    filt: EnumFilter,
    index: IndexKind = IndexKind.EUS,
    direction: str = "min",
    workers: Optional[int] = None,
) -> ExtremalReport:
    """Optimum of ``index`` over the class and its witnesses up to isomorphism."""
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    _check_caps(n, filt)
    index = IndexKind(index)
    workers = workers or default_workers()
    sign = 1.0 if direction == "min" else -1.0
    pu, pv = _pair_arrays(n)
    packed = filt.packed(n)
    table = np.ascontiguousarray(weight_table(index))
    shards = _shards(n, 4 * workers)

    def run(bounds):
        return _scan_shard(n, pu, pv, bounds[0], bounds[1], filt, packed, table, sign)

    if workers == 1:
        parts = [run(s) for s in shards]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, shards))

    best = min(p[2] for p in parts)
    if not np.isfinite(best):
        raise ScanError(f"no graph on {n} vertices matches {filt.to_dict()}")
    scanned = sum(int(p[0]) for p in parts)
    matched = sum(int(p[1]) for p in parts)
    opt_count = sum(int(p[3]) for p in parts if p[2] <= best + EPS)
    masks = [
        int(mk)
        for p in parts
        for mk, val in zip(p[4], p[5])
        if val <= best + EPS
    ]
    witnesses, verified = dedup_isomorphic([Graph.from_mask(n, mk) for mk in masks])
    return ExtremalReport(
        n=n,
        filter=filt,
        index=index,
        direction=direction,
        optimum=float(sign * best),
        witnesses=witnesses,
        scanned=scanned,
        matched=matched,
        optimal_labelings=opt_count,
        iso_verified=verified,
        shards=len(shards),
    )
