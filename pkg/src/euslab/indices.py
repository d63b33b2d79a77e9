"""Degree-based edge weights and the indices that sum them."""

from __future__ import annotations

import enum
import math
from functools import lru_cache

import numpy as np

from .graph import MAX_ORDER, Graph

# Absolute tolerance for "equal"; "strictly greater" needs a margin above it.
EPS = 1e-9


class IndexKind(enum.Enum):
    EUS = "eus"
    SO = "so"
    ESO = "eso"


def edge_weight(kind: IndexKind, di: int, dj: int) -> float:
    """Weight of an edge whose endpoints have degrees ``di`` and ``dj``.

    EUS: sqrt(di^2 + dj^2 + di*dj); SO: sqrt(di^2 + dj^2);
    ESO: (di + dj) * sqrt(di^2 + dj^2).
    """
    if di < 1 or dj < 1:
        raise ValueError(f"edge endpoints need degree >= 1, got ({di}, {dj})")
    kind = IndexKind(kind)
    if kind is IndexKind.EUS:
        return math.sqrt(di * di + dj * dj + di * dj)
    if kind is IndexKind.SO:
        return math.sqrt(di * di + dj * dj)
    return (di + dj) * math.sqrt(di * di + dj * dj)


@lru_cache(maxsize=None)
def weight_table(kind: IndexKind) -> np.ndarray:
    """``table[a, b] = edge_weight(kind, a, b)`` for degrees up to 63; row/col 0 unused."""
    kind = IndexKind(kind)
    table = np.zeros((MAX_ORDER, MAX_ORDER))
    for a in range(1, MAX_ORDER):
        for b in range(1, MAX_ORDER):
            table[a, b] = edge_weight(kind, a, b)
    table.setflags(write=False)
    return table


def index_value(g: Graph, kind: IndexKind = IndexKind.EUS) -> float:
    """Sum of edge weights, accumulated in edge-mask bit order."""
    table = weight_table(IndexKind(kind))
    deg = g.degrees()
    total = 0.0
    for i, j in g.edges():
        total += table[deg[i], deg[j]]
    return float(total)


def eus(g: Graph) -> float:
    return index_value(g, IndexKind.EUS)
