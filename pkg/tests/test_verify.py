import math

import pytest

from euslab import families
from euslab.bounds import knp_max_bound, unicyclic_min_bound
from euslab.families import clique_with_pendants
from euslab.graph import Graph, GraphError, are_isomorphic
from euslab.graph6 import parse_graph6
from euslab.indices import EPS, IndexKind, index_value
from euslab.search import EnumFilter
from euslab.verify import (
    Status,
    Uniqueness,
    Verdict,
    check_convexity_lemma,
    check_edge_addition,
    check_pendant_shift,
    pendant_shift_cases,
    proof_function,
    run_all,
    run_claim,
    shift_chain,
    verify_connected_min,
    verify_h1_corollary,
    verify_knp_max,
    verify_unicyclic_min,
    weak_compositions,
)

EUS = IndexKind.EUS


def test_unicyclic_min_examples():
    v = verify_unicyclic_min(6, 3)
    assert v.status is Status.CONFIRMED
    assert v.optimum == pytest.approx(3 * math.sqrt(19) + 4 * math.sqrt(3) + math.sqrt(7), abs=EPS)
    v = verify_unicyclic_min(5, 5)
    assert v.status is Status.CONFIRMED and v.optimum == pytest.approx(10 * math.sqrt(3), abs=EPS)
    assert are_isomorphic(parse_graph6(v.witnesses[0]), families.cycle(5))
    v = verify_unicyclic_min(6, 5)
    assert v.status is Status.CONFIRMED
    assert v.optimum == pytest.approx(6 * math.sqrt(3) + 2 * math.sqrt(19) + math.sqrt(13), abs=EPS)
    assert v.uniqueness is Uniqueness.UNIQUE
    with pytest.raises(ValueError):
        verify_unicyclic_min(10, 4)


def test_connected_min_examples():
    v = verify_connected_min(6, 4)
    assert v.status is Status.CONFIRMED
    assert v.optimum == pytest.approx(verify_unicyclic_min(6, 4).optimum, abs=EPS)
    assert "connected" in v.note
    v = verify_connected_min(7, 7)
    assert v.status is Status.CONFIRMED and v.optimum == pytest.approx(14 * math.sqrt(3), abs=EPS)
    v = verify_connected_min(7, 3)
    assert v.status is Status.CONFIRMED
    assert v.optimum == pytest.approx(3 * math.sqrt(19) + 6 * math.sqrt(3) + math.sqrt(7), abs=EPS)


def test_knp_max_examples():
    v = verify_knp_max(5, 2)
    assert v.status is Status.CONFIRMED and v.optimum == pytest.approx(23.2122583, abs=1e-7)
    v = verify_knp_max(6, 0)
    assert v.status is Status.CONFIRMED and v.optimum == pytest.approx(math.sqrt(3) * 15 * 5, abs=EPS)
    v = verify_knp_max(7, 4)
    assert v.status is Status.CONFIRMED
    assert are_isomorphic(parse_graph6(v.witnesses[0]), families.pineapple(7, 4))


@pytest.mark.parametrize("n", range(3, 8))
def test_knp_max_two_vertex_clique_is_outside_class(n):
    # K_2 plus n-2 pendants on one end is the star: n-1 pendants, not n-2.
    v = verify_knp_max(n, n - 2)
    assert v.status is Status.REFUTED
    assert "pendant" in v.note
    if v.optimum is not None:
        assert v.optimum < knp_max_bound(n, n - 2) - EPS


def test_h1_corollary():
    assert verify_h1_corollary(7, 4).status is Status.CONFIRMED
    assert verify_h1_corollary(7, 4).witnesses == ["k=0,l=1"]
    assert verify_h1_corollary(6, 3).status is Status.CONFIRMED
    assert verify_h1_corollary(6, 5).status is Status.SKIPPED


def test_edge_addition_examples():
    p3 = families.path(3)
    assert check_edge_addition(p3, 0, 2)
    delta = index_value(p3.add_edge(0, 2), EUS) - index_value(p3, EUS)
    assert delta == pytest.approx(6 * math.sqrt(3) - 2 * math.sqrt(7), abs=EPS)
    assert check_edge_addition(families.cycle(5), 0, 2)
    with pytest.raises(GraphError):
        check_edge_addition(families.cycle(5), 0, 1)


def test_convexity_examples():
    for b in range(4):
        assert check_convexity_lemma("hub-pendant", 7, 0, b, t=1.5)
        assert check_convexity_lemma("clique-edge", 7, b, 0, s1=2, s2=3)
    f = proof_function("hub-pendant", t=2.5)
    assert f(4) - f(3) > f(2) - f(1)
    assert check_convexity_lemma("hub-pendant", 4, 1, 2, t=2.5)
    with pytest.raises(KeyError):
        check_convexity_lemma("nope", 1, 1, 1)
    with pytest.raises(ValueError):
        check_convexity_lemma("hub-pendant", 1, -1, 1, t=1.0)


def test_convexity_rejects_concave():
    # a concave function violates the inequality; confirm the check can fail
    from euslab import verify

    verify.PROOF_FUNCTIONS["concave"] = (lambda: (lambda x: -x * x), ())
    try:
        assert not check_convexity_lemma("concave", 5, 1, 1)
    finally:
        del verify.PROOF_FUNCTIONS["concave"]


def test_pendant_shift_examples():
    assert check_pendant_shift((1, 1), 1)
    assert check_pendant_shift((2, 1, 0), 1)
    with pytest.raises(ValueError):
        check_pendant_shift((1, 2), 1)  # vertex 0 not maximal
    with pytest.raises(ValueError):
        check_pendant_shift((2, 0), 1)
    with pytest.raises(ValueError):
        check_pendant_shift((2, 1), 0)


def test_weak_compositions():
    comps = list(weak_compositions(3, 3))
    assert len(comps) == math.comb(5, 2) == len(set(comps))
    assert all(sum(c) == 3 and len(c) == 3 and min(c) >= 0 for c in comps)


@pytest.mark.parametrize("q", range(2, 6))
def test_shift_chain_strictly_increasing(q):
    for p in range(0, 6):
        for a in weak_compositions(p, q):
            if a[0] != max(a):
                continue
            chain = shift_chain(a)
            values = [index_value(clique_with_pendants(x), EUS) for x in chain]
            assert all(b > a_ + EPS for a_, b in zip(values, values[1:]))
            assert chain[-1] == [p] + [0] * (q - 1)
            assert values[-1] == pytest.approx(knp_max_bound(q + p, p), abs=1e-9)


def test_pendant_shift_sweep_is_exhaustive():
    cases = list(pendant_shift_cases(2, 3))
    assert ((1, 1), 1) in cases and ((1, 0, 1), 2) in cases
    assert ((0, 1), 1) not in cases


def test_verdict_round_trip():
    v = verify_unicyclic_min(5, 4)
    d = v.to_dict()
    assert Verdict.from_dict(d).to_dict() == d
    assert "elapsed" not in d


def test_run_all_small():
    verdicts = run_all(5)
    claims = {v.claim for v in verdicts}
    assert "unicyclic-min/n=5/g=3" in claims and "connected-min/n=5/g=5" in claims
    assert "h1-corollary/n=5/g=3" in claims and "pendant-shift/sweep" in claims
    refuted = [v for v in verdicts if v.status is Status.REFUTED]
    # only the n - p = 2 cases of the pendant maximum fail
    assert {v.claim for v in refuted} == {f"knp-max/n={n}/p={n - 2}" for n in range(3, 6)}


def test_connected_skipped_above_seven():
    out = run_claim("connected-min", 8)
    skipped = [v for v in out if v.status is Status.SKIPPED]
    assert {v.claim for v in skipped} == {f"connected-min/n=8/g={g}" for g in range(3, 9)}


def test_one_sided_soundness_across_girths():
    for n in range(3, 7):
        for g in range(3, n + 1):
            for v in (verify_unicyclic_min(n, g), verify_connected_min(n, g)):
                assert v.optimum >= unicyclic_min_bound(n, g) - EPS
    for n in range(3, 8):
        for p in range(0, n - 1):
            v = verify_knp_max(n, p)
            if v.optimum is not None:
                assert v.optimum <= knp_max_bound(n, p) + EPS


def test_verdicts_independent_of_workers():
    for fn, args in ((verify_unicyclic_min, (7, 4)), (verify_connected_min, (6, 3)), (verify_knp_max, (6, 2))):
        dicts = [fn(*args, workers=w).to_dict() for w in (1, 4, 16)]
        assert dicts[0] == dicts[1] == dicts[2]


def test_witnesses_repass_filter():
    v = verify_connected_min(6, 4)
    filt = EnumFilter(connected=True, girth=4)
    for s in v.witnesses:
        g = parse_graph6(s)
        assert filt.matches(g)
        assert abs(index_value(g, EUS) - v.optimum) <= 1e-9
