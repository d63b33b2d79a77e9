import itertools
import math

import pytest

from euslab import families
from euslab.families import H1Params, h1, h1_feasible
from euslab.graph import GraphError, are_isomorphic, girth, is_unicyclic, pendant_count
from euslab.indices import EPS, IndexKind, index_value

EUS = IndexKind.EUS


def test_basic_families():
    c3 = families.cycle(3)
    assert c3.m == 3 and girth(c3) == 3
    assert families.path(4).degrees() == [1, 2, 2, 1]
    k5 = families.complete(5)
    assert k5.m == 10 and set(k5.degrees()) == {4}
    assert families.star(5).degrees() == [4, 1, 1, 1, 1]
    with pytest.raises(GraphError):
        families.cycle(2)


def test_tadpole():
    t = families.tadpole(7, 4)
    assert sorted(t.degrees()) == [1, 2, 2, 2, 2, 2, 3]
    assert girth(t) == 4 and is_unicyclic(t)
    assert families.tadpole(6, 6) == families.cycle(6)
    assert index_value(families.tadpole(5, 4), EUS) == pytest.approx(
        2 * math.sqrt(3) * 2 + 2 * math.sqrt(19) + math.sqrt(13), abs=EPS
    )
    for bad in [(5, 2), (5, 6)]:
        with pytest.raises(GraphError):
            families.tadpole(*bad)


@pytest.mark.parametrize("n", range(4, 13))
def test_tadpole_shape(n):
    for g in range(3, n):
        t = families.tadpole(n, g)
        assert is_unicyclic(t) and girth(t) == g
        assert t.degrees().count(3) == 1 and pendant_count(t) == 1


def test_h1_examples():
    g = h1(H1Params(8, 4, 1, 1))
    assert g.degree(0) == 4
    expected = 3 * math.sqrt(28) + 3 * math.sqrt(12) + math.sqrt(21) + math.sqrt(7)
    assert index_value(g, EUS) == pytest.approx(expected, abs=EPS)
    assert index_value(g, EUS) == pytest.approx(33.4951397, abs=1e-7)
    assert are_isomorphic(h1(H1Params(7, 4, 0, 1)), families.tadpole(7, 4))
    assert sorted(h1(H1Params(6, 3, 3, 0)).degrees(), reverse=True) == [5, 2, 2, 1, 1, 1]


@pytest.mark.parametrize(
    "args", [(5, 2, 0, 1), (6, 4, 0, 2), (7, 4, 1, 0), (7, 4, 0, 0), (5, 3, -1, 1)]
)
def test_h1_rejects_infeasible(args):
    with pytest.raises(GraphError):
        H1Params(*args)


def test_h1_rejects_bad_path_lengths():
    with pytest.raises(GraphError):
        h1(H1Params(9, 3, 0, 2), [1, 5])
    with pytest.raises(GraphError):
        h1(H1Params(9, 3, 0, 2), [2, 2])


@pytest.mark.parametrize("n", range(3, 21))
def test_h1_structure(n):
    for g in range(3, n + 1):
        for p in h1_feasible(n, g):
            G = h1(p)
            assert G.n == n and is_unicyclic(G) and girth(G) == g
            if n > g:
                assert G.degree(0) == p.hub_degree
                assert pendant_count(G) == p.k + p.l


def path_length_splits(total, parts):
    """All ways to write ``total`` as ``parts`` integers each >= 2."""
    for cuts in itertools.combinations_with_replacement(range(total + 1), parts - 1):
        lens = [b - a for a, b in zip((0,) + cuts, cuts + (total,))]
        if all(x >= 2 for x in lens):
            yield lens


@pytest.mark.parametrize("n", range(5, 13))
def test_h1_value_ignores_path_lengths(n):
    for g in range(3, n - 1):
        for p in h1_feasible(n, g):
            if p.l < 2:
                continue
            base = index_value(h1(p), EUS)
            for lens in path_length_splits(n - g - p.k, p.l):
                assert index_value(h1(p, lens), EUS) == pytest.approx(base, abs=EPS)


@pytest.mark.parametrize("n", range(5, 11))
def test_tadpole_is_only_single_long_path_hub(n):
    for g in range(3, n - 1):
        assert are_isomorphic(h1(H1Params(n, g, 0, 1)), families.tadpole(n, g))
        others = [p for p in h1_feasible(n, g) if (p.k, p.l) != (0, 1)]
        assert not any(are_isomorphic(h1(p), families.tadpole(n, g)) for p in others)


def test_pineapple():
    g = families.pineapple(5, 2)
    assert g.degree(0) == 4 and pendant_count(g) == 2
    assert index_value(g, EUS) == pytest.approx(
        2 * math.sqrt(28) + 2 * math.sqrt(3) + 2 * math.sqrt(21), abs=EPS
    )
    assert index_value(g, EUS) == pytest.approx(23.2122583, abs=1e-7)
    for n in range(2, 9):
        assert families.pineapple(n, 0) == families.complete(n)
        assert are_isomorphic(families.pineapple(n, n - 1), families.star(n))
    with pytest.raises(GraphError):
        families.pineapple(5, 5)


def test_pineapple_degrees():
    for n in range(3, 12):
        for p in range(0, n):
            g = families.pineapple(n, p)
            deg = g.degrees()
            assert deg[0] == n - 1
            if n - p >= 3:
                assert pendant_count(g) == p
                assert deg[1 : n - p] == [n - p - 1] * (n - p - 1)


def test_clique_with_pendants():
    assert are_isomorphic(families.clique_with_pendants([3, 0, 0]), families.pineapple(6, 3))
    assert are_isomorphic(families.clique_with_pendants([1, 1]), families.path(4))
    assert index_value(families.clique_with_pendants([2, 1]), EUS) == pytest.approx(
        math.sqrt(19) + 2 * math.sqrt(13) + math.sqrt(7), abs=EPS
    )
    assert index_value(families.clique_with_pendants([2, 1]), EUS) == pytest.approx(14.2158, abs=1e-4)
    g = families.clique_with_pendants([0, 2, 1, 0])
    assert g.degrees()[:4] == [3, 5, 4, 3]
    with pytest.raises(GraphError):
        families.clique_with_pendants([3])
    with pytest.raises(GraphError):
        families.clique_with_pendants([1, -1])
