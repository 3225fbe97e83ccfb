import pytest

from corpus import corpus, lens_pairs
from lensgrid import (
    STAB_TYPES,
    berge_verdict,
    classical_invariants,
    core_knot_diagram,
    floer_simple_check,
    homology_hat,
    quadruple_invariants,
    simple_knot_diagram,
    stabilize,
)
from lensgrid.berge import CONSISTENT_INDEX_ONE, COUNTEREXAMPLE, INCONCLUSIVE, OBSTRUCTION_FOUND


def test_index_one_l31():
    r = quadruple_invariants(simple_knot_diagram(3, 1, 1))
    assert r.all_nonzero and r.index_one and r.floer_simple
    assert r.verdict == CONSISTENT_INDEX_ONE
    assert berge_verdict(simple_knot_diagram(3, 1, 1), True) == CONSISTENT_INDEX_ONE


@pytest.mark.parametrize("p,q", lens_pairs(5))
def test_every_index_one_diagram_is_all_true(p, q):
    for k in range(1, p):
        r = quadruple_invariants(simple_knot_diagram(p, q, k))
        assert r.all_nonzero and r.index_one and r.floer_simple


@pytest.mark.parametrize("t", ["W:SE", "W:NW"])
def test_stabilized_l21_core_is_obstructed(t):
    r = quadruple_invariants(stabilize(core_knot_diagram(2, 1), t, 0), True)
    assert not r.all_nonzero
    assert r.verdict == OBSTRUCTION_FOUND


@pytest.mark.parametrize("p,q", lens_pairs(5))
def test_every_stabilization_of_a_core_is_obstructed(p, q):
    core = core_knot_diagram(p, q)
    for t in STAB_TYPES:
        d = stabilize(core, t, 0)
        verdict = berge_verdict(d, True)
        # a Counterexample here would falsify the index-one characterization
        assert verdict != COUNTEREXAMPLE, f"{t} stabilization of the core in L({p},{q})"
        assert verdict == OBSTRUCTION_FOUND


def test_inconclusive_without_surgery_assumption():
    found = False
    for d in corpus():
        if d.n > 1:
            r = quadruple_invariants(d)
            if r.all_nonzero:
                assert r.verdict == INCONCLUSIVE
                found = True
    if not found:
        pytest.skip("no index > 1 corpus diagram with all four classes nonzero")


def test_floer_simple():
    assert floer_simple_check(simple_knot_diagram(5, 2, 3))
    d = next(d for d in corpus() if homology_hat(d).rank > d.p)
    assert not floer_simple_check(d)


def test_tb_agrees_when_all_true():
    # among the core family and its stabilizations, only diagrams with the
    # core's tb can have all four classes nonzero
    for p, q in lens_pairs(5):
        core = core_knot_diagram(p, q)
        tb = classical_invariants(core).tb
        for d in [core] + [stabilize(core, t, 0) for t in STAB_TYPES]:
            if quadruple_invariants(d).all_nonzero:
                assert classical_invariants(d).tb == tb
