"""Executable checks of the extremal EUS results.

Each ``verify_*`` compares a closed-form bound against a brute-force scan
and decides uniqueness of the optimum up to isomorphism. The ``check_*``
functions test the inequalities the proofs are built from.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import bounds, families
from .graph import Graph, GraphError, are_isomorphic, pendant_count
from .graph6 import emit_graph6
from .indices import EPS, IndexKind, index_value
from .search import EnumFilter, ScanError, extremal_scan

CONNECTED_GIRTH_NOTE = (
    "class read as connected graphs of order n and girth g; "
    "disconnected graphs with finite girth are not scanned"
)


class Status(enum.Enum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted"
    SKIPPED = "skipped"


class Uniqueness(enum.Enum):
    UNIQUE = "unique-up-to-iso"
    MULTIPLE = "multiple-witnesses"
    NOT_CHECKED = "not-checked"


@dataclass
class Verdict:
    claim: str
    status: Status
    bound: Optional[float] = None
    optimum: Optional[float] = None
    gap: Optional[float] = None
    uniqueness: Uniqueness = Uniqueness.NOT_CHECKED
    witness_count: int = 0
    witnesses: list[str] = field(default_factory=list)
    reason: str = ""
    note: str = ""
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status is not Status.REFUTED

    def to_dict(self) -> dict:
        """Stable fields only; ``elapsed`` is reported separately."""
        d = {"claim": self.claim, "status": self.status.value}
        for key in ("bound", "optimum", "gap"):
            value = getattr(self, key)
            if value is not None:
                d[key] = round(value, 12) + 0.0
        d["uniqueness"] = self.uniqueness.value
        d["witness_count"] = self.witness_count
        d["witnesses"] = list(self.witnesses)
        if self.reason:
            d["reason"] = self.reason
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d: dict, elapsed: float = 0.0) -> "Verdict":
        return cls(
            claim=d["claim"],
            status=Status(d["status"]),
            bound=d.get("bound"),
            optimum=d.get("optimum"),
            gap=d.get("gap"),
            uniqueness=Uniqueness(d["uniqueness"]),
            witness_count=d["witness_count"],
            witnesses=list(d["witnesses"]),
            reason=d.get("reason", ""),
            note=d.get("note", ""),
            elapsed=elapsed,
        )


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        v = fn(*args, **kwargs)
        v.elapsed = time.perf_counter() - t0
        return v

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _judge(claim, bound, expected: Graph, report, direction, note="") -> Verdict:
    gap = report.optimum - bound
    wits = report.witnesses
    unique = len(wits) == 1
    v = Verdict(
        claim=claim,
        status=Status.CONFIRMED,
        bound=bound,
        optimum=report.optimum,
        gap=gap,
        uniqueness=Uniqueness.UNIQUE if unique else Uniqueness.MULTIPLE,
        witness_count=len(wits),
        witnesses=[emit_graph6(w) for w in wits],
        note=note,
    )
    sound = gap >= -EPS if direction == "min" else gap <= EPS
    if not sound:
        v.status = Status.REFUTED
        v.reason = f"scan optimum beats the bound by {abs(gap):.3e}"
    elif abs(gap) > EPS:
        v.status = Status.REFUTED
        v.reason = f"bound holds but is not attained (gap {gap:.3e})"
    elif not unique:
        v.status = Status.REFUTED
        v.reason = f"{len(wits)} non-isomorphic optimal graphs"
    elif not are_isomorphic(wits[0], expected):
        v.status = Status.REFUTED
        v.reason = f"optimal graph is not the expected extremal graph {emit_graph6(expected)}"
    return v


def expected_girth_minimizer(n: int, g: int) -> Graph:
    return families.cycle(n) if g == n else families.tadpole(n, g)


@_timed
def verify_unicyclic_min(n: int, g: int, workers: Optional[int] = None) -> Verdict:
    """Minimum EUS over unicyclic graphs of order ``n`` and girth ``g``."""
    if not 3 <= g <= n <= 9:
        raise ValueError(f"needs 3 <= g <= n <= 9, got n={n}, g={g}")
    report = extremal_scan(n, EnumFilter(unicyclic=True, girth=g), IndexKind.EUS, "min", workers)
    return _judge(
        f"unicyclic-min/n={n}/g={g}",
        bounds.unicyclic_min_bound(n, g),
        expected_girth_minimizer(n, g),
        report,
        "min",
    )


@_timed
def verify_connected_min(n: int, g: int, workers: Optional[int] = None) -> Verdict:
    """Minimum EUS over connected graphs of order ``n`` and girth ``g``."""
    if not 3 <= g <= n <= 7:
        raise ValueError(f"needs 3 <= g <= n <= 7, got n={n}, g={g}")
    report = extremal_scan(n, EnumFilter(connected=True, girth=g), IndexKind.EUS, "min", workers)
    return _judge(
        f"connected-min/n={n}/g={g}",
        bounds.unicyclic_min_bound(n, g),
        expected_girth_minimizer(n, g),
        report,
        "min",
        note=CONNECTED_GIRTH_NOTE,
    )


@_timed
def verify_knp_max(n: int, p: int, workers: Optional[int] = None) -> Verdict:
    """Maximum EUS over connected graphs of order ``n`` with exactly ``p`` pendants."""
    if not (n <= 7 and 0 <= p <= n - 2):
        raise ValueError(f"needs n <= 7 and 0 <= p <= n - 2, got n={n}, p={p}")
    claim = f"knp-max/n={n}/p={p}"
    bound = bounds.knp_max_bound(n, p)
    expected = families.pineapple(n, p)
    note = ""
    if pendant_count(expected) != p:
        note = f"K_{{n,p}} has {pendant_count(expected)} pendant vertices, so it lies outside the class"
    try:
        report = extremal_scan(
            n, EnumFilter(connected=True, pendant_count=p), IndexKind.EUS, "max", workers
        )
    except ScanError as exc:
        return Verdict(
            claim,
            Status.REFUTED,
            bound=bound,
            witnesses=[emit_graph6(expected)],
            reason=f"bound not attained: {exc}",
            note=note,
        )
    return _judge(claim, bound, expected, report, "max", note=note)


@_timed
def verify_h1_corollary(n: int, g: int) -> Verdict:
    """Among hub graphs of order ``n`` and girth ``g``, the tadpole alone is minimal."""
    claim = f"h1-corollary/n={n}/g={g}"
    if n > 12:
        raise ValueError(f"needs n <= 12, got {n}")
    if g > n - 2:
        return Verdict(claim, Status.SKIPPED, reason="g <= n-2 required")
    if g < 3:
        raise GraphError(f"girth must be >= 3, got {g}")
    bound = bounds.tadpole_min_value(n)
    values = {(p.k, p.l): bounds.eus_h1(n, g, p.k, p.l) for p in families.h1_feasible(n, g)}
    best = min(values.values())
    argmin = [kl for kl, val in values.items() if val <= best + EPS]
    v = Verdict(
        claim,
        Status.CONFIRMED,
        bound=bound,
        optimum=best,
        gap=best - bound,
        uniqueness=Uniqueness.UNIQUE if len(argmin) == 1 else Uniqueness.MULTIPLE,
        witness_count=len(argmin),
        witnesses=[f"k={k},l={l}" for k, l in sorted(argmin)],
    )
    if abs(best - bound) > EPS or argmin != [(0, 1)]:
        v.status = Status.REFUTED
        v.reason = f"minimum {best:.9f} attained at {sorted(argmin)}"
    return v


def check_edge_addition(g: Graph, i: int, j: int) -> bool:
    """True iff adding edge ``ij`` raises EUS by more than EPS."""
    if g.has_edge(i, j):
        raise GraphError(f"edge ({i}, {j}) already present")
    h = g.add_edge(i, j)
    return index_value(h, IndexKind.EUS) - index_value(g, IndexKind.EUS) > EPS


def _hub_pendant_fn(t: float) -> Callable[[float], float]:
    return lambda x: math.sqrt((x + t) ** 2 + 0.75)


def _clique_edge_fn(s1: float, s2: float) -> Callable[[float], float]:
    return lambda x: math.sqrt((x + s1) ** 2 + s2**2 + (x + s1) * s2)


# Convex functions used in the pendant-shift argument.
PROOF_FUNCTIONS = {
    "hub-pendant": (_hub_pendant_fn, ("t",)),
    "clique-edge": (_clique_edge_fn, ("s1", "s2")),
}


def proof_function(fid: str, **params: float) -> Callable[[float], float]:
    if fid not in PROOF_FUNCTIONS:
        raise KeyError(f"unregistered proof function {fid!r}; known: {sorted(PROOF_FUNCTIONS)}")
    make, names = PROOF_FUNCTIONS[fid]
    missing = set(names) - set(params)
    if missing:
        raise TypeError(f"{fid} needs parameters {sorted(missing)}")
    return make(*(params[k] for k in names))


def check_convexity_lemma(fid: str, x: float, a: float, b: float, **params: float) -> bool:
    """``f(x) - f(x-a) >= f(x-b) - f(x-b-a)``, with equality only when ``a*b == 0``."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be non-negative")
    f = proof_function(fid, **params)
    diff = (f(x) - f(x - a)) - (f(x - b) - f(x - b - a))
    if a * b == 0:
        return abs(diff) <= EPS
    return diff > EPS


def shift_pendant(a: Sequence[int], i: int) -> list[int]:
    """Move one pendant from clique vertex ``i`` to clique vertex 0."""
    out = list(a)
    out[0] += 1
    out[i] -= 1
    return out


def check_pendant_shift(a: Sequence[int], i: int) -> bool:
    """True iff shifting a pendant from vertex ``i`` (0-based) to vertex 0 raises EUS.

    Vertex 0 must carry a maximum number of pendants and ``a[i] >= 1``.
    """
    a = list(a)
    if len(a) < 2:
        raise GraphError("need at least two clique vertices")
    if not 1 <= i < len(a):
        raise ValueError(f"index must be in [1, {len(a) - 1}], got {i}")
    if a[0] != max(a):
        raise ValueError(f"vertex 0 must carry the most pendants: {a}")
    if a[i] < 1:
        raise ValueError(f"vertex {i} has no pendant to move")
    before = index_value(families.clique_with_pendants(a), IndexKind.EUS)
    after = index_value(families.clique_with_pendants(shift_pendant(a, i)), IndexKind.EUS)
    return after > before + EPS


def weak_compositions(total: int, parts: int):
    """All tuples of ``parts`` non-negative integers summing to ``total``."""
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for c in cuts:
            out.append(c - prev - 1)
            prev = c
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def shift_chain(a: Sequence[int]) -> list[list[int]]:
    """Pendant vectors visited by repeated shifts from ``a`` to ``(p, 0, ..., 0)``."""
    a = list(a)
    chain = [a]
    while any(a[1:]):
        i = next(k for k in range(1, len(a)) if a[k])
        a = shift_pendant(a, i)
        chain.append(a)
    return chain


def random_edge_addition_cases(count: int, max_n: int = 10, seed: int = 0):
    rng = random.Random(seed)
    cases = []
    while len(cases) < count:
        n = rng.randint(2, max_n)
        density = rng.random()
        edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < density]
        g = Graph.from_edges(n, edges)
        non_edges = [(i, j) for j in range(n) for i in range(j) if not g.has_edge(i, j)]
        if non_edges:
            cases.append((g, *rng.choice(non_edges)))
    return cases


def convexity_grid():
    """Parameter grid for both proof functions."""
    for fid in ("hub-pendant",):
        for t2 in range(1, 22, 2):
            for x in range(5, 16):
                for a in range(6):
                    for b in range(6):
                        yield fid, x, a, b, {"t": t2 / 2}
    for s1 in range(1, 9):
        for s2 in range(s1, s1 + 9):
            for x in range(5, 16):
                for a in range(6):
                    for b in range(6):
                        yield "clique-edge", x, a, b, {"s1": s1, "s2": s2}


def pendant_shift_cases(max_p: int = 8, max_parts: int = 8):
    for p in range(1, max_p + 1):
        for parts in range(2, max_parts + 1):
            for a in weak_compositions(p, parts):
                if a[0] != max(a):
                    continue
                for i in range(1, parts):
                    if a[i] >= 1:
                        yield a, i


@_timed
def verify_edge_addition_suite(count: int = 1000, seed: int = 0) -> Verdict:
    bad = [
        (g, i, j) for g, i, j in random_edge_addition_cases(count, seed=seed)
        if not check_edge_addition(g, i, j)
    ]
    return _suite_verdict(
        "edge-addition/random", count, [f"{emit_graph6(g)}+({i},{j})" for g, i, j in bad]
    )


@_timed
def verify_convexity_suite() -> Verdict:
    total = 0
    bad = []
    for fid, x, a, b, params in convexity_grid():
        total += 1
        if not check_convexity_lemma(fid, x, a, b, **params):
            bad.append(f"{fid} x={x} a={a} b={b} {params}")
    return _suite_verdict("convexity/grid", total, bad)


@_timed
def verify_pendant_shift_suite(max_p: int = 8, max_parts: int = 8) -> Verdict:
    total = 0
    bad = []
    for a, i in pendant_shift_cases(max_p, max_parts):
        total += 1
        if not check_pendant_shift(a, i):
            bad.append(f"a={list(a)} i={i}")
    return _suite_verdict("pendant-shift/sweep", total, bad)


def _suite_verdict(claim: str, total: int, bad: list[str]) -> Verdict:
    v = Verdict(claim, Status.CONFIRMED, witness_count=len(bad), witnesses=bad[:10])
    v.reason = f"{total} cases, {len(bad)} violations"
    if bad:
        v.status = Status.REFUTED
    return v


CLAIMS = ("unicyclic-min", "connected-min", "knp-max", "h1-corollary", "lemmas")


def run_claim(claim: str, max_n: int, workers: Optional[int] = None) -> list[Verdict]:
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; choose from {CLAIMS}")
    out: list[Verdict] = []
    if claim == "unicyclic-min":
        for n in range(3, max_n + 1):
            for g in range(3, n + 1):
                out.append(verify_unicyclic_min(n, g, workers))
    elif claim == "connected-min":
        for n in range(3, max_n + 1):
            for g in range(3, n + 1):
                if n <= 7:
                    out.append(verify_connected_min(n, g, workers))
                else:
                    out.append(Verdict(f"connected-min/n={n}/g={g}", Status.SKIPPED,
                                       reason="full scan limited to n <= 7"))
    elif claim == "knp-max":
        for n in range(3, max_n + 1):
            for p in range(0, n - 1):
                if n <= 7:
                    out.append(verify_knp_max(n, p, workers))
                else:
                    out.append(Verdict(f"knp-max/n={n}/p={p}", Status.SKIPPED,
                                       reason="full scan limited to n <= 7"))
    elif claim == "h1-corollary":
        for n in range(5, min(max_n, 12) + 1):
            for g in range(3, n - 1):
                out.append(verify_h1_corollary(n, g))
    else:
        out += [verify_edge_addition_suite(), verify_convexity_suite(), verify_pendant_shift_suite()]
    return out


def run_all(max_n: int, workers: Optional[int] = None) -> list[Verdict]:
    """Every check over its feasible range up to ``max_n`` (at most 9)."""
    if max_n > 9:
        raise ValueError(f"max_n must be <= 9, got {max_n}")
    return [v for claim in CLAIMS for v in run_claim(claim, max_n, workers)]
