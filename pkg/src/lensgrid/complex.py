"""The grid chain complex CFK^-, its gradings, and homology queries over F2.

Parallelograms of the lens space diagram are found as rectangles in the S^3
cover. A parallelogram from x to y has the points of x at its upper left and
lower right corners; the differential counts empty parallelograms that avoid
every w and weights them by U^(z multiplicities).
"""

from __future__ import annotations

from bisect import bisect_left, insort
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from . import gf2
from .dinvariant import d_invariant
from .errors import NotACycle
from .grid import (
    GridDiagram,
    Generator,
    enumerate_generators,
    lift_cover,
    lift_generator,
    project_vertex,
    spinc_label,
    x_minus,
    x_plus,
)

Exponents = tuple[int, ...]
Term = tuple[Generator, Exponents]


@dataclass(frozen=True)
class Parallelogram:
    source: Generator
    target: Generator
    rows: tuple[int, int]          # alpha curves of the upper left and lower right corners
    cover_rect: tuple[int, int, int, int]  # (top row, left col, bottom row, right col)
    z_mult: tuple[int, ...]
    w_mult: tuple[int, ...]
    empty: bool


class ChainElement:
    """Finite F2 combination of U-monomial multiples of generators."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Term] = ()):
        acc: set[Term] = set()
        for t in terms:
            acc ^= {t}
        self.terms = frozenset(acc)

    @classmethod
    def generator(cls, x: Generator, n: int) -> "ChainElement":
        return cls([(tuple(x), (0,) * n)])

    def __add__(self, other: "ChainElement") -> "ChainElement":
        return ChainElement._raw(self.terms ^ other.terms)

    @classmethod
    def _raw(cls, terms) -> "ChainElement":
        obj = cls.__new__(cls)
        obj.terms = frozenset(terms)
        return obj

    def times(self, exps: Exponents) -> "ChainElement":
        return ChainElement._raw((x, _add(e, exps)) for x, e in self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, ChainElement) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(sorted(self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return "ChainElement(%r)" % sorted(self.terms)


def _add(a: Exponents, b: Exponents) -> Exponents:
    return tuple(i + j for i, j in zip(a, b))


# -- parallelograms -----------------------------------------------------------

@lru_cache(maxsize=1 << 18)
def _mark_counts(d: GridDiagram, Rb: int, h: int, Cl: int, wd: int):
    """z and w multiplicities, per row of d, of the cover rectangle with
    rows Rb .. Rb+h-1 and columns Cl .. Cl+wd-1 (cyclically)."""
    cover = lift_cover(d)
    N, n = d.N, d.n
    z_mult, w_mult = [0] * n, [0] * n
    for k in range(h):
        R = (Rb + k) % N
        if (cover.z[R] - Cl) % N < wd:
            z_mult[R % n] += 1
        if (cover.w[R] - Cl) % N < wd:
            w_mult[R % n] += 1
    return tuple(z_mult), tuple(w_mult)


def _rectangles_from(d: GridDiagram, x: Generator, avoid_w: bool,
                     empty_only: bool = False) -> list[Parallelogram]:
    cover = lift_cover(d)
    cols = lift_generator(d, x)
    N, n, p = d.N, d.n, d.p
    out = []
    for it in range(n):
        Rt, Cl = it, cols[it]
        for Rb in range(N):
            if Rb % n == it:
                continue
            Cr = cols[Rb]
            h = (Rt - Rb) % N
            wd = (Cr - Cl) % N
            z_mult, w_mult = _mark_counts(d, Rb, h, Cl, wd)
            if avoid_w and any(w_mult):
                continue
            empty = not any(0 < (cols[(Rb + k) % N] - Cl) % N < wd for k in range(1, h))
            if empty:
                for k in range(1, p):
                    for (R, C) in (cover.deck(Rb, Cl, k), cover.deck(Rt, Cr, k)):
                        if 0 < (R - Rb) % N < h and 0 < (C - Cl) % N < wd:
                            empty = False
            if empty_only and not empty:
                continue
            y = list(x)
            ib = Rb % n
            y[it] = project_vertex(d, Rt, Cr)[1]
            y[ib] = project_vertex(d, Rb, Cl)[1]
            out.append(Parallelogram(tuple(x), tuple(y), (it, ib), (Rt, Cl, Rb, Cr),
                                     z_mult, w_mult, empty))
    return out


def parallelograms_from(d: GridDiagram, x: Generator) -> list[Parallelogram]:
    """Every parallelogram with source x, empty or not."""
    return _rectangles_from(d, tuple(x), avoid_w=False)


def parallelograms(d: GridDiagram, x: Generator, y: Generator) -> list[Parallelogram]:
    x, y = tuple(x), tuple(y)
    if x == y:
        return []
    return [r for r in parallelograms_from(d, x) if r.target == y]


# -- the complex --------------------------------------------------------------

class GridComplex:
    """Cached data for one diagram: generators, differential, gradings."""

    def __init__(self, d: GridDiagram):
        self.d = d

    @cached_property
    def generators(self) -> list[Generator]:
        return enumerate_generators(self.d)

    @cached_property
    def index(self) -> dict[Generator, int]:
        return {x: i for i, x in enumerate(self.generators)}

    def boundary_terms(self, x: Generator) -> list[tuple[Generator, Exponents]]:
        return self._boundary[tuple(x)]

    @cached_property
    def _boundary(self):
        return _BoundaryCache(self.d)

    def boundary(self, elem: ChainElement) -> ChainElement:
        acc: set[Term] = set()
        for x, e in elem.terms:
            for y, zm in self.boundary_terms(x):
                acc ^= {(y, _add(e, zm))}
        return ChainElement._raw(acc)

    # gradings

    @cached_property
    def cover(self):
        return lift_cover(self.d)

    @cached_property
    def _cover_components(self) -> list[list[int]]:
        """Cover components grouped by the base component they cover."""
        groups = [[] for _ in self.d.components]
        for comp in self.cover.components:
            groups[self.d.component_of_row[comp[0] % self.d.n]].append(comp)
        return groups

    def _pts(self, x: Generator) -> list[tuple[int, int]]:
        return _points(self.cover.N, lift_generator(self.d, x))

    def cover_maslov(self, x: Generator) -> int:
        pts = self._pts(x)
        O = self._counts_z
        return _I_self(pts) - O.above(pts) - O.below(pts) + self._IOO + 1

    def cover_maslov_w(self, x: Generator) -> int:
        pts = self._pts(x)
        X = self._counts_w
        return _I_self(pts) - X.above(pts) - X.below(pts) + self._IXX + 1

    @cached_property
    def _marks_z(self):
        return _cells(self.cover.N, self.cover.z)

    @cached_property
    def _marks_w(self):
        return _cells(self.cover.N, self.cover.w)

    @cached_property
    def _counts_z(self):
        return _MarkCounts(self._marks_z, 2 * self.cover.N)

    @cached_property
    def _counts_w(self):
        return _MarkCounts(self._marks_w, 2 * self.cover.N)

    @cached_property
    def _IOO(self):
        return _I(self._marks_z, self._marks_z)

    @cached_property
    def _IXX(self):
        return _I(self._marks_w, self._marks_w)

    @cached_property
    def _alexander_data(self):
        """Per base component: mark counts of the lifted sublink, the
        constant part of twice J, and the correction term."""
        N = self.cover.N
        Xall, Oall = self._marks_w, self._marks_z
        out = []
        for group in self._cover_components:
            rows = [R for comp in group for R in comp]
            Xs = _cells(N, [self.cover.w[R] for R in rows], rows)
            Os = _cells(N, [self.cover.z[R] for R in rows], rows)
            const = -_J2(Xall, Xs) + _J2(Xall, Os) - _J2(Oall, Xs) + _J2(Oall, Os)
            out.append((_MarkCounts(Xs, 2 * N), _MarkCounts(Os, 2 * N), const,
                        Fraction(len(rows) - len(group), 2)))
        return out

    def cover_alexander(self, x: Generator) -> tuple[Fraction, ...]:
        """Alexander grading of the lift with respect to each lifted sublink."""
        pts = self._pts(x)
        out = []
        for Xs, Os, const, corr in self._alexander_data:
            # twice is 4 * J(x - (X+O)/2, X_S - O_S)
            twice = 2 * (Xs.both(pts) - Os.both(pts)) + const
            out.append(Fraction(twice, 4) - corr)
        return tuple(out)

    def alexander(self, x: Generator) -> tuple[Fraction, ...]:
        p = self.d.p
        return tuple(a / p + Fraction(1, 2) * (1 - Fraction(1, r))
                     for a, r in zip(self.cover_alexander(x), self._orders))

    @cached_property
    def _orders(self) -> tuple[int, ...]:
        return tuple(self.d.p // len(g) for g in self._cover_components)

    @cached_property
    def anchored_classes(self) -> frozenset[int]:
        return frozenset({spinc_label(self.d, x_plus(self.d)),
                          spinc_label(self.d, x_minus(self.d))})

    @cached_property
    def _class_base(self) -> dict[int, Generator]:
        out: dict[int, Generator] = {}
        for x in self.generators:
            out.setdefault(spinc_label(self.d, x), x)
        return out

    @cached_property
    def d_shift(self) -> Fraction:
        p, q = self.d.p, self.d.q
        return -d_invariant(p, q, q - 1)

    def maslov(self, x: Generator) -> tuple[Fraction, bool]:
        s = spinc_label(self.d, x)
        m = Fraction(self.cover_maslov(x), self.d.p)
        if s in self.anchored_classes:
            return m + self.d_shift, True
        base = self._class_base[s]
        return m - Fraction(self.cover_maslov(base), self.d.p), False

    def grading(self, x: Generator) -> "GradingReport":
        m, anchored = self.maslov(x)
        a = self.alexander(x)
        return GradingReport(m, anchored, a, sum(a, Fraction(0)), spinc_label(self.d, x))

    @cached_property
    def gradings(self) -> dict[Generator, "GradingReport"]:
        return {x: self.grading(x) for x in self.generators}


class _BoundaryCache(dict):
    def __init__(self, d):
        super().__init__()
        self.d = d

    def __missing__(self, x):
        terms = [(r.target, r.z_mult) for r in _rectangles_from(self.d, x, avoid_w=True, empty_only=True)
                 if r.empty]
        self[x] = terms
        return terms


def _points(N: int, cols) -> list[tuple[int, int]]:
    # horizontal reflection puts the source corners at lower left / upper right
    return [((-2 * C) % (2 * N), 2 * R) for R, C in enumerate(cols)]


def _cells(N: int, cols, rows=None) -> list[tuple[int, int]]:
    if rows is None:
        rows = range(len(cols))
    return [(2 * (N - 1 - C) + 1, 2 * R + 1) for R, C in zip(rows, cols)]


def _I(P, Q) -> int:
    return sum(1 for a in P for b in Q if a[0] < b[0] and a[1] < b[1])


def _J2(P, Q) -> int:
    return _I(P, Q) + _I(Q, P)


def _I_self(P) -> int:
    """_I(P, P) for points listed in increasing second coordinate."""
    seen: list[int] = []
    count = 0
    for a, _ in P:
        count += bisect_left(seen, a)
        insort(seen, a)
    return count


class _MarkCounts:
    """Dominance counts against a fixed point set Q in [0, size)^2, so that
    _I(P, Q) and _I(Q, P) cost one lookup per point of P."""

    def __init__(self, Q, size: int):
        grid = [[0] * (size + 1) for _ in range(size + 1)]
        for a, b in Q:
            grid[a][b] += 1
        # le[a][b] = #{q : q0 < a, q1 < b}, ge[a][b] = #{q : q0 > a, q1 > b}
        le = [[0] * (size + 1) for _ in range(size + 1)]
        for a in range(1, size + 1):
            for b in range(1, size + 1):
                le[a][b] = grid[a - 1][b - 1] + le[a - 1][b] + le[a][b - 1] - le[a - 1][b - 1]
        total = len(Q)
        col = [0] * (size + 1)            # col[a] = #{q : q0 <= a}
        row = [0] * (size + 1)            # row[b] = #{q : q1 <= b}
        for a, b in Q:
            col[a] += 1
            row[b] += 1
        for i in range(1, size + 1):
            col[i] += col[i - 1]
            row[i] += row[i - 1]
        self._le = le
        self._col, self._row, self._total = col, row, total

    def below(self, P) -> int:
        """_I(Q, P)."""
        le = self._le
        return sum(le[a][b] for a, b in P)

    def above(self, P) -> int:
        """_I(P, Q), by inclusion-exclusion on the closed lower-left quadrant."""
        le, col, row, total = self._le, self._col, self._row, self._total
        return sum(total - col[a] - row[b] + le[a + 1][b + 1] for a, b in P)

    def both(self, P) -> int:
        return self.above(P) + self.below(P)


@dataclass(frozen=True)
class GradingReport:
    maslov: Fraction
    anchored: bool
    alexander: tuple[Fraction, ...]
    collapsed: Fraction
    spinc: int


_complexes: dict[GridDiagram, GridComplex] = {}


def grid_complex(d: GridDiagram) -> GridComplex:
    c = _complexes.get(d)
    if c is None:
        if len(_complexes) > 256:
            _complexes.clear()
        c = _complexes[d] = GridComplex(d)
    return c


def boundary_minus(d: GridDiagram, elem) -> ChainElement:
    if not isinstance(elem, ChainElement):
        elem = ChainElement.generator(elem, d.n)
    return grid_complex(d).boundary(elem)


def maslov(d: GridDiagram, x: Generator) -> tuple[Fraction, bool]:
    return grid_complex(d).maslov(tuple(x))


def alexander(d: GridDiagram, x: Generator) -> tuple[tuple[Fraction, ...], Fraction]:
    a = grid_complex(d).alexander(tuple(x))
    return a, sum(a, Fraction(0))


def grading(d: GridDiagram, x: Generator) -> GradingReport:
    return grid_complex(d).grading(tuple(x))
