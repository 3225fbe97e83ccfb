import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from corpus import corpus, lens_pairs, random_diagram
from lensgrid import (
    ChainElement,
    Interleaved,
    NoSuchSite,
    NotACycle,
    class_is_nonzero_hat,
    enumerate_generators,
    grid_complex,
    homology_hat,
    simple_knot_diagram,
    tilde_rank,
    u_unified_nonvanishing,
    x_minus,
    x_plus,
)
from lensgrid.moves import commute_columns, commute_rows

seeds = st.integers(0, 2**32 - 1)


@pytest.mark.parametrize("p,q", lens_pairs(7))
def test_simple_knots_have_rank_p(p, q):
    for k in range(1, p):
        H = homology_hat(simple_knot_diagram(p, q, k))
        assert H.rank == p
        assert len({s for s, _, _ in H.blocks}) == p


def test_tilde_oracle():
    for d in corpus()[:40]:
        assert homology_hat(d).rank * 2 ** (d.n - len(d.components)) == tilde_rank(d)


def test_knots_have_odd_rank_in_every_class():
    # the Spin^c pieces of a knot collapse to HF-hat(L(p,q), s), which has rank one
    for d in corpus():
        if len(d.components) != 1:
            continue
        per = Counter()
        for (s, _, _), r in homology_hat(d).blocks.items():
            per[s] += r
        assert len(per) == d.p and all(r % 2 == 1 for r in per.values())


def test_single_block_queries_agree_with_all():
    for d in corpus()[:15]:
        H = homology_hat(d)
        for (s, a, m), r in list(H.blocks.items())[:6]:
            assert homology_hat(d, (s, a, m)).rank == r
            assert homology_hat(d, (s, a)).blocks[(s, a, m)] == r


def test_distinguished_classes_on_index_one():
    for p, q in lens_pairs(5):
        d = simple_knot_diagram(p, q, 1)
        assert class_is_nonzero_hat(d, x_plus(d))
        assert class_is_nonzero_hat(d, x_minus(d))
        assert u_unified_nonvanishing(d, x_plus(d))


def test_zero_element_is_zero():
    d = simple_knot_diagram(3, 1, 1)
    zero = ChainElement()
    assert not class_is_nonzero_hat(d, zero)
    assert not u_unified_nonvanishing(d, zero)


def test_boundaries_are_zero():
    for d in corpus()[:40]:
        C = grid_complex(d)
        for x in C.generators[:10]:
            b = C.boundary(ChainElement.generator(x, d.n))
            if b:
                assert not u_unified_nonvanishing(d, b)
                break


def test_non_cycle_rejected():
    for d in corpus():
        C = grid_complex(d)
        for x in C.generators:
            if C.boundary(ChainElement.generator(x, d.n)):
                with pytest.raises(NotACycle):
                    u_unified_nonvanishing(d, x)
                return
    pytest.fail("no non-cycle generator in the corpus")


def test_u_tower_survives_for_distinguished_generators():
    for d in corpus()[:60]:
        assert u_unified_nonvanishing(d, x_plus(d))
        assert u_unified_nonvanishing(d, x_minus(d))


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_rank_invariant_under_commutation(seed):
    rng = random.Random(seed)
    d = random_diagram(rng, 3, 4)
    r = homology_hat(d).rank
    for i in range(d.n):
        for f in (commute_columns, commute_rows):
            try:
                e = f(d, i)
            except (Interleaved, NoSuchSite):
                continue
            assert homology_hat(e).rank == r


def test_generators_of_index_one_are_all_cycles():
    d = simple_knot_diagram(5, 2, 2)
    for x in enumerate_generators(d):
        assert class_is_nonzero_hat(d, x)
