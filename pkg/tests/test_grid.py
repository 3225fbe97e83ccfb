import random
from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from corpus import corpus, lens_pairs, random_diagram
from lensgrid import (
    BadOffset,
    CellCollision,
    ColumnCollision,
    GridDiagram,
    NonCoprime,
    QOutOfRange,
    core_knot_diagram,
    cover_diagram,
    dualize,
    enumerate_generators,
    generator_count,
    lift_cover,
    lift_generator,
    parallelograms_from,
    rectilinear_projection,
    simple_knot_diagram,
    spinc_difference,
    validate,
)
from lensgrid.grid import from_permutation, permutation, sheets

seeds = st.integers(0, 2**32 - 1)


# -- validate -----------------------------------------------------------------

def test_smallest_diagram():
    d = validate(2, 1, [0], [1])
    assert d.n == 1 and len(d.components) == 1


@pytest.mark.parametrize("p,q,err", [(4, 2, NonCoprime), (6, 3, NonCoprime),
                                     (3, 0, QOutOfRange), (3, 3, QOutOfRange), (3, 5, QOutOfRange)])
def test_bad_lens(p, q, err):
    with pytest.raises(err):
        validate(p, q, [0], [1])


def test_collisions():
    with pytest.raises(ColumnCollision):
        validate(3, 1, [0, 2], [1, 0])       # both z in column 0
    with pytest.raises(CellCollision):
        validate(3, 1, [0, 1], [0, 3])       # z and w share cell 0 of row 0


def test_component_count_two_rows():
    # row 0: z at slot 0 -> w at slot 1; column 1 climbs to the z of row 1;
    # row 1: z at slot 1 -> w at slot 0; column 0 climbs back to row 0
    d = validate(3, 1, [0, 1], [1, 0])
    assert d.components == ((0, 1),)


def test_simple_knot_diagram():
    assert core_knot_diagram(2, 1) == simple_knot_diagram(2, 1, 1)
    assert len(enumerate_generators(simple_knot_diagram(5, 2, 3))) == 5
    with pytest.raises(BadOffset):
        simple_knot_diagram(3, 1, 0)


# -- generators ---------------------------------------------------------------

@pytest.mark.parametrize("p,n,count", [(5, 1, 5), (3, 2, 18), (2, 3, 48)])
def test_generator_counts(p, n, count):
    rng = random.Random(p * 10 + n)
    while True:
        d = random_diagram(rng, n, p, nmin=n)
        if d.p == p:
            break
    gens = enumerate_generators(d)
    assert len(gens) == count == generator_count(d)
    assert gens == sorted(gens)


def test_generators_index_one():
    assert enumerate_generators(simple_knot_diagram(5, 1, 2)) == [(a,) for a in range(5)]


def test_generators_satisfy_residue_rule():
    for d in corpus()[:30]:
        for x in enumerate_generators(d):
            sigma = [(a + d.q * i) % d.n for i, a in enumerate(x)]
            assert sorted(sigma) == list(range(d.n))


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_generator_count_property(seed):
    d = random_diagram(random.Random(seed), 3, 4)
    assert len(enumerate_generators(d)) == factorial(d.n) * d.p ** d.n


def test_permutation_sheet_round_trip():
    for d in corpus()[:20]:
        for x in enumerate_generators(d)[:50]:
            assert from_permutation(d, permutation(d, x), sheets(d, x)) == x


# -- Spin^c -------------------------------------------------------------------

def _small_diagrams():
    out = []
    for p, q in lens_pairs(3):
        for n in (1, 2):
            for zc in product(range(p), repeat=n):
                for wc in product(range(p), repeat=n):
                    try:
                        out.append(validate(p, q, [i + n * zc[i] for i in range(n)],
                                            [(i + 1) % n + n * wc[i] for i in range(n)]))
                    except Exception:
                        pass
    return out


def test_spinc_additive_and_antisymmetric():
    for d in _small_diagrams()[::5]:
        gens = enumerate_generators(d)
        for x in gens:
            assert spinc_difference(d, x, x) == 0
            for y in gens:
                assert spinc_difference(d, x, y) == (-spinc_difference(d, y, x)) % d.p
                for z in gens[:6]:
                    assert spinc_difference(d, x, z) == \
                        (spinc_difference(d, x, y) + spinc_difference(d, y, z)) % d.p


def test_parallelograms_preserve_spinc():
    for d in _small_diagrams():
        for x in enumerate_generators(d):
            for r in parallelograms_from(d, x):
                assert spinc_difference(d, x, r.target) == 0


@pytest.mark.parametrize("p,q", lens_pairs(7))
def test_index_one_classes_distinct(p, q):
    d = core_knot_diagram(p, q)
    gens = enumerate_generators(d)
    diffs = sorted(spinc_difference(d, gens[0], y) for y in gens)
    assert diffs == list(range(p))


# -- cover --------------------------------------------------------------------

def test_core_l21_lifts_to_unknot():
    c = cover_diagram(core_knot_diagram(2, 1))
    assert (c.p, c.n) == (1, 2)
    assert len(c.components) == 1
    assert rectilinear_projection(c).crossings == ()


def test_deck_shift_order():
    for d in corpus()[:20]:
        cover = lift_cover(d)
        R, C = 0, cover.w[0]
        for _ in range(d.p):
            R, C = cover.deck(R, C, 1)
        assert (R % d.N, C % d.N) == (0, cover.w[0])
        for k in range(d.p):
            for R0 in range(d.N):
                R1, C1 = cover.deck(R0, cover.z[R0], k)
                assert cover.z[R1 % d.N] == C1 % d.N


def test_lift_generator_columns_distinct():
    rng = random.Random(7)
    d = random_diagram(rng, 2, 3, nmin=2)
    while d.p != 3:
        d = random_diagram(rng, 2, 3, nmin=2)
    for x in enumerate_generators(d):
        cols = lift_generator(d, x)
        assert len(cols) == 6 and len(set(cols)) == 6


def test_lifts_are_distinct():
    for d in corpus()[:20]:
        lifts = {tuple(lift_generator(d, x)) for x in enumerate_generators(d)}
        assert len(lifts) == generator_count(d)


# -- dualize ------------------------------------------------------------------

def test_dual_of_l21_core():
    d = dualize(core_knot_diagram(2, 1))
    assert (d.p, d.q, d.n) == (2, 1, 1)


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_dualize_properties(seed):
    d = random_diagram(random.Random(seed), 3, 5)
    dd = dualize(d)
    assert (dd.p, dd.q, dd.n) == (d.p, d.p - d.q, d.n)
    assert dualize(dd) == d


def test_cover_diagram_is_s3_grid():
    for d in corpus()[:20]:
        c = cover_diagram(d)
        assert isinstance(c, GridDiagram) and (c.p, c.q, c.n) == (1, 0, d.N)
