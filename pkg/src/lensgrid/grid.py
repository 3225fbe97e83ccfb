"""Twisted toroidal grid diagrams for links in L(p, q) and their S^3 covers.

Coordinates
-----------
Row ``i`` lies between the horizontal curves alpha_i and alpha_{i+1}. It is
cut by the beta curves into ``p*n`` cells. A basepoint is stored by the
*slot* of its cell; slots are numbered so that slot ``s`` of every row lies
in column ``s % n`` and cell ``s`` of row ``i`` sits directly below cell
``s`` of row ``i + 1``. Crossing alpha_0 upward (from row ``n-1`` to row 0)
shifts the slot by ``-q*n``; this is the twist that makes the torus a lens
space.

A generator is stored by raw positions: ``pos[i] = a`` means the point
``x = a/(p*n)`` on alpha_i. Its slot coordinate is ``a + q*i``, so the beta
curve through it is ``(a + q*i) % n``.

Lifting stacks ``p`` copies of the diagram. Cover row ``k*n + i`` is row
``i`` of sheet ``k``, and slot ``s`` of that row becomes cover column
``s + q*n*k``. Columns of the cover are then vertical and it is an ordinary
``N x N`` toroidal grid with ``N = p*n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, factorial

from .errors import (
    BadOffset,
    CellCollision,
    ColumnCollision,
    NonCoprime,
    QOutOfRange,
)

Generator = tuple[int, ...]


@dataclass(frozen=True)
class GridDiagram:
    p: int
    q: int
    z: tuple[int, ...]
    w: tuple[int, ...]

    def __post_init__(self):
        _check(self.p, self.q, self.z, self.w)
        N = self.p * len(self.z)
        object.__setattr__(self, "z", tuple(s % N for s in self.z))
        object.__setattr__(self, "w", tuple(s % N for s in self.w))

    @property
    def n(self) -> int:
        return len(self.z)

    @property
    def N(self) -> int:
        return self.p * self.n

    @cached_property
    def q_inv(self) -> int:
        return pow(self.q, -1, self.p) if self.p > 1 else 0

    @cached_property
    def next_row(self) -> tuple[int, ...]:
        """Row reached from row i by the horizontal arc z_i -> w_i followed by
        the vertical arc from w_i up to the z in its column."""
        z_row = {s % self.n: i for i, s in enumerate(self.z)}
        return tuple(z_row[s % self.n] for s in self.w)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Link components as tuples of rows (basepoint pairs), in trace order."""
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            comp = []
            i = start
            while i not in seen:
                seen.add(i)
                comp.append(i)
                i = self.next_row[i]
            comps.append(tuple(comp))
        return tuple(comps)

    @cached_property
    def component_of_row(self) -> tuple[int, ...]:
        out = [0] * self.n
        for c, rows in enumerate(self.components):
            for i in rows:
                out[i] = c
        return tuple(out)

    def vertical_rows(self, i: int) -> int:
        """Number of rows climbed by the vertical arc leaving w_i (cell centre
        to cell centre)."""
        cover = lift_cover(self)
        C = self.w[i]
        R = i
        while True:
            R += 1
            if cover.z[R % self.N] == C:
                return R - i

    @cached_property
    def homology_classes(self) -> tuple[int, ...]:
        """Class of each component in H_1(L(p,q)) = Z_p (net vertical winding)."""
        out = []
        for rows in self.components:
            climb = sum(self.vertical_rows(i) for i in rows)
            assert climb % self.n == 0
            out.append((climb // self.n) % self.p)
        return tuple(out)

    @cached_property
    def orders(self) -> tuple[int, ...]:
        """Order r_i of each component's class in Z_p."""
        return tuple(self.p // gcd(h, self.p) for h in self.homology_classes)

    def column(self, s: int) -> int:
        return s % self.n

    def with_slots(self, z, w) -> "GridDiagram":
        return GridDiagram(self.p, self.q, tuple(z), tuple(w))


def _check(p, q, z, w):
    # (1, 0) is the ordinary toroidal grid for S^3, used for covers
    if (p, q) != (1, 0) and (p < 2 or not (0 < q < p)):
        raise QOutOfRange(f"need 0 < q < p, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise NonCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")
    n = len(z)
    if n == 0 or len(w) != n:
        raise ColumnCollision("z and w must list one slot per row")
    N = p * n
    for name, slots in (("z", z), ("w", w)):
        cols = sorted(s % n for s in slots)
        if cols != list(range(n)):
            raise ColumnCollision(f"{name} basepoints share a column: {list(slots)}")
    for i in range(n):
        if z[i] % N == w[i] % N:
            raise CellCollision(f"z and w share cell {z[i] % N} of row {i}")


def validate(p: int, q: int, z, w) -> GridDiagram:
    """Build a diagram from raw data, raising a subclass of InvalidDiagram."""
    if not (0 < int(q) < int(p)):
        raise QOutOfRange(f"need 0 < q < p, got p={p}, q={q}")
    return GridDiagram(int(p), int(q), tuple(int(s) for s in z), tuple(int(s) for s in w))


def simple_knot_diagram(p: int, q: int, k: int) -> GridDiagram:
    """Index one diagram with z in slot 0 and w in slot k.

    ``k = q`` is the core of the filling torus (the trivial 1-braid).
    """
    if k % p == 0:
        raise BadOffset("w must not share the cell of z")
    return validate(p, q, [0], [k % p])


def core_knot_diagram(p: int, q: int) -> GridDiagram:
    return simple_knot_diagram(p, q, q)


# -- generators ---------------------------------------------------------------

def slot_of(d: GridDiagram, i: int, a: int) -> int:
    """Slot coordinate of raw position a on alpha_i."""
    return (a + d.q * i) % d.N


def raw_of(d: GridDiagram, i: int, s: int) -> int:
    return (s - d.q * i) % d.N


def permutation(d: GridDiagram, x: Generator) -> tuple[int, ...]:
    return tuple((a + d.q * i) % d.n for i, a in enumerate(x))


def sheets(d: GridDiagram, x: Generator) -> tuple[int, ...]:
    return tuple(((a + d.q * i - s) // d.n) % d.p
                 for i, (a, s) in enumerate(zip(x, permutation(d, x))))


def from_permutation(d: GridDiagram, sigma, ks) -> Generator:
    """Inverse of (permutation, sheets)."""
    return tuple((sigma[i] + d.n * ks[i] - d.q * i) % d.N for i in range(d.n))


def is_generator(d: GridDiagram, x) -> bool:
    if len(x) != d.n:
        return False
    return sorted(permutation(d, x)) == list(range(d.n))


def generator_count(d: GridDiagram) -> int:
    return factorial(d.n) * d.p ** d.n


def enumerate_generators(d: GridDiagram) -> list[Generator]:
    """All generators, lexicographic in the raw positions."""
    n, N, q = d.n, d.N, d.q
    out: list[Generator] = []
    pos = [0] * n
    used = [False] * n

    def rec(i):
        if i == n:
            out.append(tuple(pos))
            return
        for a in range(N):
            c = (a + q * i) % n
            if not used[c]:
                used[c] = True
                pos[i] = a
                rec(i + 1)
                used[c] = False

    rec(0)
    return out


def spinc_label(d: GridDiagram, x: Generator) -> int:
    """A Z_p label whose differences are the Spin^c differences.

    The label is the sum of the cover heights of the points of x, measured
    along one fixed lift of each beta curve, divided by n.
    """
    return (-d.q_inv * sum(sheets(d, x))) % d.p


def spinc_difference(d: GridDiagram, x: Generator, y: Generator) -> int:
    """Class in H_1(L(p,q)) = Z_p of alpha arcs x -> y plus beta arcs y -> x."""
    return (spinc_label(d, x) - spinc_label(d, y)) % d.p


# -- cover --------------------------------------------------------------------

@dataclass(frozen=True)
class CoverGrid:
    """An N x N toroidal grid for the preimage link in S^3.

    ``z[R]`` and ``w[R]`` are the columns of the markings in cover row R.
    ``sheet_rows`` is n: the deck translation moves row R to R + n and
    column C to C + q*n.
    """

    N: int
    n: int
    p: int
    q: int
    z: tuple[int, ...]
    w: tuple[int, ...]
    base_row: tuple[int, ...] = field(repr=False)

    def deck(self, R: int, C: int, times: int = 1) -> tuple[int, int]:
        return ((R + times * self.n) % self.N, (C + times * self.q * self.n) % self.N)

    @cached_property
    def z_row_of_col(self) -> tuple[int, ...]:
        out = [0] * self.N
        for R, C in enumerate(self.z):
            out[C] = R
        return tuple(out)

    @cached_property
    def w_row_of_col(self) -> tuple[int, ...]:
        out = [0] * self.N
        for R, C in enumerate(self.w):
            out[C] = R
        return tuple(out)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen: set[int] = set()
        comps = []
        for start in range(self.N):
            if start in seen:
                continue
            comp = []
            R = start
            while R not in seen:
                seen.add(R)
                comp.append(R)
                R = self.z_row_of_col[self.w[R]]
            comps.append(tuple(comp))
        return tuple(comps)

    def is_deck_invariant(self) -> bool:
        for R in range(self.N):
            R2, Cz = self.deck(R, self.z[R])
            _, Cw = self.deck(R, self.w[R])
            if self.z[R2] != Cz or self.w[R2] != Cw:
                return False
        return True


def lift_cover(d: GridDiagram) -> CoverGrid:
    return _lift_cover(d.p, d.q, d.z, d.w)


_cover_cache: dict = {}


def _lift_cover(p, q, z, w) -> CoverGrid:
    key = (p, q, z, w)
    hit = _cover_cache.get(key)
    if hit is not None:
        return hit
    n = len(z)
    N = p * n
    zc, wc, base = [], [], []
    for k in range(p):
        for i in range(n):
            zc.append((z[i] + q * n * k) % N)
            wc.append((w[i] + q * n * k) % N)
            base.append(i)
    cover = CoverGrid(N, n, p, q, tuple(zc), tuple(wc), tuple(base))
    if len(_cover_cache) > 4096:
        _cover_cache.clear()
    _cover_cache[key] = cover
    return cover


def cover_diagram(d: GridDiagram) -> GridDiagram:
    """The cover as an S^3 grid diagram (p = 1, q = 0)."""
    c = lift_cover(d)
    return GridDiagram(1, 0, c.z, c.w)


def lift_generator(d: GridDiagram, x: Generator) -> tuple[int, ...]:
    """Cover generator as a tuple: entry R is the column of the point on
    cover row line R."""
    n, N, q = d.n, d.N, d.q
    cols = [0] * N
    for k in range(d.p):
        for i, a in enumerate(x):
            cols[k * n + i] = (a + q * i + q * n * k) % N
    return tuple(cols)


def project_vertex(d: GridDiagram, R: int, C: int) -> tuple[int, int]:
    """Base (alpha index, raw position) of the cover vertex (R, C)."""
    k, i = divmod(R % d.N, d.n)
    s = (C - d.q * d.n * k) % d.N
    return i, raw_of(d, i, s)


def project_generator(d: GridDiagram, cols) -> Generator:
    """Inverse of lift_generator on deck-invariant cover generators."""
    return tuple(project_vertex(d, i, cols[i])[1] for i in range(d.n))


# -- duality ------------------------------------------------------------------

def dualize(d: GridDiagram) -> GridDiagram:
    """Reflect about y = 1/2, swap z and w, and shear back to a grid diagram
    for L(p, p-q). In slot coordinates the shear is the constant shift by
    -q*n, and dualizing twice is the identity."""
    n, shift = d.n, d.q * d.n
    z = [0] * n
    w = [0] * n
    for i in range(n):
        z[n - 1 - i] = d.w[i] - shift
        w[n - 1 - i] = d.z[i] - shift
    return GridDiagram(d.p, d.p - d.q, tuple(z), tuple(w))


# -- distinguished generators -------------------------------------------------

def x_plus(d: GridDiagram) -> Generator:
    """Upper left corners of the cells holding w basepoints."""
    x = [0] * d.n
    for i, s in enumerate(d.w):
        x[(i + 1) % d.n] = (s - d.q * (i + 1)) % d.N
    return tuple(x)


def x_minus(d: GridDiagram) -> Generator:
    """Lower right corners of the cells holding w basepoints."""
    return tuple((s + 1 - d.q * i) % d.N for i, s in enumerate(d.w))
