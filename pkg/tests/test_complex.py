import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from corpus import corpus, lens_pairs, random_diagram
from lensgrid import (
    ChainElement,
    boundary_minus,
    core_knot_diagram,
    d_invariant,
    enumerate_generators,
    grading,
    grid_complex,
    lift_cover,
    lift_generator,
    parallelograms,
    simple_knot_diagram,
    spinc_label,
    x_minus,
    x_plus,
)

seeds = st.integers(0, 2**32 - 1)


def brute_rectangles(d, x, y):
    """Lattice rectangles of the cover with x~ at the upper left and lower
    right corners and y~ at the other two, one per deck orbit, as
    (z multiplicities, w multiplicities, empty)."""
    N, n, p = d.N, d.n, d.p
    X, Y = lift_generator(d, x), lift_generator(d, y)
    cover = lift_cover(d)
    moved = {R for R in range(N) if X[R] != Y[R]}
    if len(moved) != 2 * p:
        return Counter()
    found = Counter()
    for Rb in range(N):
        for h in range(1, N):
            Rt = (Rb + h) % N
            if Rt >= n:               # one representative per deck orbit
                continue
            for Cl in range(N):
                for wd in range(1, N):
                    Cr = (Cl + wd) % N
                    if not (X[Rt] == Cl and X[Rb] == Cr and Y[Rt] == Cr and Y[Rb] == Cl):
                        continue
                    orbit = {(R + k * n) % N for R in (Rt, Rb) for k in range(p)}
                    if orbit != moved:
                        continue

                    def inside_rows(R):
                        return (R - Rb) % N < h

                    def inside_cols(C):
                        return (C - Cl) % N < wd

                    empty = not any(0 < (R - Rb) % N < h and 0 < (P[R] - Cl) % N < wd
                                    for P in (X, Y) for R in range(N))
                    zm, wm = [0] * n, [0] * n
                    for R in range(N):
                        if inside_rows(R):
                            zm[R % n] += inside_cols(cover.z[R])
                            wm[R % n] += inside_cols(cover.w[R])
                    found[(tuple(zm), tuple(wm), empty)] += 1
    return found


@pytest.mark.parametrize("seed", range(6))
def test_parallelograms_match_brute_force(seed):
    rng = random.Random(seed)
    d = random_diagram(rng, 2, 2, nmin=2)
    gens = enumerate_generators(d)
    for x in gens:
        for y in gens:
            if x == y:
                assert parallelograms(d, x, y) == []
                continue
            got = Counter((r.z_mult, r.w_mult, r.empty) for r in parallelograms(d, x, y))
            assert got == brute_rectangles(d, x, y)


def test_parallelograms_match_brute_force_p3():
    rng = random.Random(11)
    d = random_diagram(rng, 2, 3, nmin=2)
    while d.p != 3:
        d = random_diagram(rng, 2, 3, nmin=2)
    gens = enumerate_generators(d)
    for x in gens[::3]:
        for y in gens:
            if x != y:
                got = Counter((r.z_mult, r.w_mult, r.empty) for r in parallelograms(d, x, y))
                assert got == brute_rectangles(d, x, y)


def test_at_most_two_empty_parallelograms_per_pair():
    # as on a torus, x and y can be joined by a parallelogram and its complement
    for d in corpus()[:40]:
        C = grid_complex(d)
        for x in C.generators[:40]:
            targets = Counter(y for y, _ in C.boundary_terms(x))
            assert max(targets.values(), default=0) <= 2


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_d_squared_zero(seed):
    d = random_diagram(random.Random(seed), 3, 4)
    C = grid_complex(d)
    for x in C.generators:
        assert not C.boundary(C.boundary(ChainElement.generator(x, d.n)))


@pytest.mark.parametrize("p,q", lens_pairs(7))
def test_index_one_differential_vanishes(p, q):
    for k in range(1, p):
        d = simple_knot_diagram(p, q, k)
        for x in enumerate_generators(d):
            assert not boundary_minus(d, x)


def test_distinguished_cycles():
    for d in corpus():
        assert not boundary_minus(d, x_plus(d))
        assert not boundary_minus(d, x_minus(d))


def test_grading_laws():
    for d in corpus()[:50]:
        C = grid_complex(d)
        for x in C.generators:
            gx = C.gradings[x]
            for y, zm in C.boundary_terms(x):
                gy = C.gradings[y]
                assert gx.spinc == gy.spinc
                assert gx.maslov - (gy.maslov - 2 * sum(zm)) == 1
                for comp, rows in enumerate(d.components):
                    assert gx.alexander[comp] - gy.alexander[comp] == -sum(zm[r] for r in rows)


def test_cover_maslov_consistency():
    for d in corpus()[:30]:
        C = grid_complex(d)
        for x in C.generators[:20]:
            for y in C.generators[:20]:
                if spinc_label(d, x) == spinc_label(d, y):
                    assert d.p * (C.maslov(x)[0] - C.maslov(y)[0]) == C.cover_maslov(x) - C.cover_maslov(y)


def test_anchored_maslov_values():
    g = grading(core_knot_diagram(2, 1), x_plus(core_knot_diagram(2, 1)))
    assert g.anchored and g.maslov == Fraction(1, 4) == -d_invariant(2, 1, 0)
    for p, q in lens_pairs(7):
        d = core_knot_diagram(p, q)
        assert grading(d, x_plus(d)).maslov == -d_invariant(p, q, q - 1)


def test_unanchored_classes_flagged():
    d = core_knot_diagram(5, 2)
    C = grid_complex(d)
    anchored = {g.spinc for g in C.gradings.values() if g.anchored}
    assert anchored == {spinc_label(d, x_plus(d)), spinc_label(d, x_minus(d))}


def test_alexander_trivial_braid_l31():
    d = core_knot_diagram(3, 1)
    assert grading(d, x_plus(d)).collapsed == Fraction(1, 3)


def test_u_action_on_gradings():
    # multiplying a term by U_i lowers M by 2 and A of the component of row i by 1;
    # checked through the grading law on terms with nonzero exponents
    seen = 0
    for d in corpus()[:60]:
        C = grid_complex(d)
        for x in C.generators:
            for y, zm in C.boundary_terms(x):
                if any(zm):
                    seen += 1
                    gx, gy = C.gradings[x], C.gradings[y]
                    assert gx.maslov - 1 == gy.maslov - 2 * sum(zm)
    assert seen > 0
