"""Closed-form values and bounds for the EUS index.

Each expression is evaluated term by term in its published grouping, with
no algebraic simplification.
"""

from __future__ import annotations

import enum
from math import comb, sqrt

from .families import H1Params
from .graph import GraphError


class BoundCase(enum.Enum):
    GIRTH_EQUALS_N = "g=n"
    GIRTH_EQUALS_N_MINUS_1 = "g=n-1"
    GIRTH_AT_MOST_N_MINUS_2 = "g<=n-2"

    @classmethod
    def of(cls, n: int, g: int) -> "BoundCase":
        if not 3 <= g <= n:
            raise GraphError(f"girth must satisfy 3 <= g <= n, got n={n}, g={g}")
        if g == n:
            return cls.GIRTH_EQUALS_N
        if g == n - 1:
            return cls.GIRTH_EQUALS_N_MINUS_1
        return cls.GIRTH_AT_MOST_N_MINUS_2


def eus_h1(n: int, g: int, k: int, l: int) -> float:
    """EUS of the hub graph with ``k`` pendant edges and ``l`` long pendant paths."""
    H1Params(n, g, k, l)
    if g > n - 2:
        raise GraphError(f"closed form needs g <= n - 2, got n={n}, g={g}")
    D = k + l + 2
    return (
        (l + 2) * sqrt(D**2 + 2 * D + 4)
        + l * sqrt(7)
        + k * sqrt(D**2 + D + 1)
        + (n - k - 2 * l - 2) * sqrt(12)
    )


def tadpole_min_value(n: int) -> float:
    """Smallest EUS of a hub graph on ``n`` vertices with girth at most ``n - 2``."""
    return 3 * sqrt(19) + 2 * (n - 4) * sqrt(3) + sqrt(7)


def unicyclic_min_bound(n: int, g: int) -> float:
    """Lower bound on EUS for order ``n`` and girth ``g``.

    Serves both unicyclic and connected graphs; the right-hand sides agree.
    """
    case = BoundCase.of(n, g)
    if case is BoundCase.GIRTH_EQUALS_N:
        return 2 * sqrt(3) * n
    if case is BoundCase.GIRTH_EQUALS_N_MINUS_1:
        return 2 * sqrt(3) * (n - 3) + 2 * sqrt(19) + sqrt(13)
    return tadpole_min_value(n)


def knp_max_bound(n: int, p: int) -> float:
    """Upper bound on EUS for order ``n`` with ``p`` pendant vertices."""
    if p < 0 or n - p < 2:
        raise GraphError(f"bound needs p >= 0 and n - p >= 2, got n={n}, p={p}")
    q = n - p - 1
    return (
        sqrt(3) * comb(q, 2) * q
        + p * sqrt(n**2 - n + 1)
        + q * sqrt((n - 1) * (2 * n - p - 2) + q**2)
    )
