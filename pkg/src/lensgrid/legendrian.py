"""Rectilinear projections and classical invariants of grid Legendrians."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .grid import CoverGrid, GridDiagram, lift_cover

LEFT, RIGHT, UP, DOWN = "left", "right", "up", "down"

# corner type from the pair of arms (directions in which the strand leaves
# the corner point)
_CORNER = {
    frozenset("NE"): "SW",
    frozenset("SW"): "NE",
    frozenset("SE"): "NW",
    frozenset("NW"): "SE",
}


@dataclass(frozen=True)
class Corner:
    row: int
    slot: int
    kind: str          # NW, NE, SW, SE
    component: int
    cusp: str | None   # "up", "down" or None when the corner smooths out


@dataclass(frozen=True)
class RectilinearProjection:
    corners: tuple[Corner, ...]
    crossings: tuple[tuple[int, int, int, int, int], ...]  # (row, slot, over comp, under comp, sign)
    writhe: int
    c_down: int
    c_up: int
    m: int
    l: int
    # per component
    writhe_self: tuple[int, ...]
    writhe_mixed: tuple[int, ...]
    c_down_i: tuple[int, ...]
    c_up_i: tuple[int, ...]
    m_i: tuple[int, ...]
    l_i: tuple[int, ...]

    @property
    def c(self) -> int:
        return self.c_down + self.c_up


def _vertical_cells(cover: CoverGrid, R0: int, C: int, up: bool):
    """Cells strictly between a w marking at (R0, C) and the z marking of
    its cover column, walking up or down. Also returns the alpha lines
    crossed as a list of (line index, +1/-1)."""
    N = cover.N
    step = 1 if up else -1
    R = R0
    cells, lines = [], []
    while True:
        if up:
            lines.append(((R + 1) % N, 1))
        else:
            lines.append((R % N, -1))
        R += step
        if cover.z[R % N] == C:
            return cells, lines
        cells.append(R % N)


def rectilinear_projection(d: GridDiagram, horizontal=None, vertical=None) -> RectilinearProjection:
    """Projection of the link onto the torus.

    ``horizontal[i]`` is LEFT (default) or RIGHT: the way the arc of row i runs
    from z_i to w_i. ``vertical[i]`` is UP (default) or DOWN: the way the
    column arc leaving w_i runs to its z. Vertical strands cross over
    horizontal ones.
    """
    n, N = d.n, d.N
    horizontal = horizontal or [LEFT] * n
    vertical = vertical or [UP] * n
    cover = lift_cover(d)
    comp = d.component_of_row
    ncomp = len(d.components)

    # horizontal arcs: set of cells covered in each row, and beta crossings
    h_cells: list[set[int]] = []
    l_i = [0] * ncomp
    for i in range(n):
        zs, ws = d.z[i], d.w[i]
        cells = set()
        if horizontal[i] == LEFT:
            s = zs
            while True:
                if s % n == 0:          # leaving slot s through its left edge
                    l_i[comp[i]] += 1
                s = (s - 1) % N
                if s == ws:
                    break
                cells.add(s)
        else:
            s = zs
            while True:
                s = (s + 1) % N
                if s % n == 0:          # entering slot s through its left edge
                    l_i[comp[i]] -= 1
                if s == ws:
                    break
                cells.add(s)
        h_cells.append(cells)

    # vertical arcs
    crossings = []
    m_i = [0] * ncomp
    for i in range(n):
        up = vertical[i] == UP
        cells, lines = _vertical_cells(cover, i, d.w[i], up)
        for line, sign in lines:
            if line % n == 0:
                m_i[comp[i]] += sign
        C = d.w[i]
        for R in cells:
            k, r = divmod(R, n)
            s = (C - d.q * n * k) % N
            if s in h_cells[r]:
                o_y = 1 if up else -1
                u_x = -1 if horizontal[r] == LEFT else 1
                crossings.append((r, s, comp[i], comp[r], -o_y * u_x))

    # corners and cusps
    corners = []
    c_down_i = [0] * ncomp
    c_up_i = [0] * ncomp
    for i in range(n):
        # corner at w_i: strand arrives along row i, leaves along the column
        arrive = "E" if horizontal[i] == LEFT else "W"
        leave = "N" if vertical[i] == UP else "S"
        _add_corner(corners, i, d.w[i], arrive, leave, comp[i], c_down_i, c_up_i)
        # corner at z_i: strand arrives along the column of z_i, leaves along row i
        j = _w_row_in_column(d, d.z[i] % n)
        arrive = "S" if vertical[j] == UP else "N"
        leave = "W" if horizontal[i] == LEFT else "E"
        _add_corner(corners, i, d.z[i], arrive, leave, comp[i], c_down_i, c_up_i)

    w_self = [0] * ncomp
    w_mixed = [0] * ncomp
    for (_, _, a, b, sgn) in crossings:
        if a == b:
            w_self[a] += sgn
        else:
            w_mixed[a] += sgn
            w_mixed[b] += sgn
    return RectilinearProjection(
        corners=tuple(corners),
        crossings=tuple(crossings),
        writhe=sum(c[4] for c in crossings),
        c_down=sum(c_down_i),
        c_up=sum(c_up_i),
        m=sum(m_i),
        l=sum(l_i),
        writhe_self=tuple(w_self),
        writhe_mixed=tuple(w_mixed),
        c_down_i=tuple(c_down_i),
        c_up_i=tuple(c_up_i),
        m_i=tuple(m_i),
        l_i=tuple(l_i),
    )


def _w_row_in_column(d: GridDiagram, col: int) -> int:
    for j, s in enumerate(d.w):
        if s % d.n == col:
            return j
    raise AssertionError("column without w")


def _add_corner(corners, row, slot, arrive, leave, comp, c_down_i, c_up_i):
    kind = _CORNER[frozenset(arrive + leave)]
    cusp = None
    if kind in ("NW", "SE"):
        # rotating the projection 45 degrees counterclockwise turns NW and SE
        # corners into left and right cusps; after rotation the strand moves
        # down through a left cusp entered from the east and through a right
        # cusp entered from the north
        cusp = "down" if arrive == ("E" if kind == "NW" else "N") else "up"
        if cusp == "down":
            c_down_i[comp] += 1
        else:
            c_up_i[comp] += 1
    corners.append(Corner(row, slot, kind, comp, cusp))


@dataclass(frozen=True)
class ClassicalInvariants:
    tb: Fraction
    rot: Fraction
    sl: Fraction
    tb_i: tuple[Fraction, ...]
    rot_i: tuple[Fraction, ...]
    sl_i: tuple[Fraction, ...]


def invariants_from_projection(P: RectilinearProjection, p: int) -> ClassicalInvariants:
    """Rational tb, rot and sl from projection counts (p = 1 for S^3)."""
    F = Fraction
    tb = P.writhe - F(P.c, 2) - F(P.m * P.l, p)
    rot = F(P.c_down - P.c_up, 2) - F(P.l - P.m, p)
    sl = P.writhe - P.c_down - F(P.m * P.l + (P.m - P.l), p)
    k = len(P.m_i)
    tb_i, rot_i, sl_i = [], [], []
    for i in range(k):
        m, l = P.m_i[i], P.l_i[i]
        c = P.c_down_i[i] + P.c_up_i[i]
        # share of component i in tb: mixed crossings and the cross terms of
        # m*l are split evenly between the two components involved
        w_i = P.writhe_self[i] + F(P.writhe_mixed[i], 2)
        t = w_i - F(c, 2) - F(m * P.l + P.m * l, 2 * p)
        r = F(P.c_down_i[i] - P.c_up_i[i], 2) - F(l - m, p)
        tb_i.append(t)
        rot_i.append(r)
        sl_i.append(t - r)
    return ClassicalInvariants(tb, rot, sl, tuple(tb_i), tuple(rot_i), tuple(sl_i))


def classical_invariants(d: GridDiagram, horizontal=None, vertical=None) -> ClassicalInvariants:
    return invariants_from_projection(rectilinear_projection(d, horizontal, vertical), d.p)


# -- braids about the binding ---------------------------------------------------

@dataclass(frozen=True)
class BraidWord:
    """A braid in B_k as signed Artin generators (m stands for sigma_m, -m
    for its inverse). The closure about the rational open book also carries
    the boundary twist delta^(q/p), which is not part of the word."""

    word: tuple[int, ...]
    strands: int

    @property
    def writhe(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.word)

    def permutation(self) -> tuple[int, ...]:
        """Position reached at the top by the strand starting at each position."""
        at = list(range(self.strands))
        for g in self.word:
            m = abs(g)
            at[m - 1], at[m] = at[m], at[m - 1]
        return tuple(at.index(i) for i in range(self.strands))


def _passing(d: GridDiagram) -> list[list[int]]:
    """Slots of the vertical arcs that cross each row from bottom to top."""
    n, N, q = d.n, d.N, d.q
    out: list[list[int]] = [[] for _ in range(n)]
    for j in range(n):
        s, r = d.w[j], j
        while True:
            r += 1
            if r == n:
                r, s = 0, (s - q * n) % N
            if d.z[r] == s:
                break
            out[r].append(s)
    return out


def braid_word(d: GridDiagram) -> BraidWord:
    """Braid of the induced transverse link about the binding.

    Pages meet the torus in horizontal circles, so the strands at a given
    height are the vertical arcs crossing that row, ordered by slot. The
    arc of row i carries one strand from z_i to w_i through the meridian
    disk on the alpha side, i.e. past the strands in between. Between
    alpha_0 and itself the strands drift a q/p turn to the left; every
    strand that drifts across slot 0 passes all the others on that same
    side.
    """
    n, q = d.n, d.q
    passing = _passing(d)
    word: list[int] = []
    for i in range(n):
        below = sorted(passing[i] + [d.z[i]])
        above = sorted(passing[i] + [d.w[i]])
        a, b = below.index(d.z[i]), above.index(d.w[i])
        if b < a:
            word += range(a, b, -1)
        else:
            word += (-m for m in range(a + 1, b + 1))
    top = passing[n - 1] + [d.w[n - 1]]
    k = len(top)
    for _ in range(sum(1 for s in top if s < q * n)):
        word += (-m for m in range(1, k))
    return BraidWord(tuple(word), k)


def sl_from_braid(word, k: int, p: int, q: int) -> Fraction:
    """Rational self-linking number of the closure of word * delta^(q/p)."""
    w = word.writhe if isinstance(word, BraidWord) else sum(1 if g > 0 else -1 for g in word)
    return w + Fraction(q * k * k - q * k - k, p)


# -- the universal cover ----------------------------------------------------------

@dataclass(frozen=True)
class CoverClassical:
    """Classical invariants of the lift to S^3. Per-component values are
    summed over the lifts of each base component."""

    tb: Fraction
    rot: Fraction
    sl: Fraction
    rot_i: tuple[Fraction, ...]
    sl_i: tuple[Fraction, ...]
    writhe: int
    m: int
    l: int


def cover_classical(d: GridDiagram) -> CoverClassical:
    from .grid import cover_diagram

    c = cover_diagram(d)
    P = rectilinear_projection(c)
    ci = invariants_from_projection(P, 1)
    base_comp = [d.component_of_row[rows[0] % d.n] for rows in c.components]
    k = len(d.components)
    rot_i = [Fraction(0)] * k
    sl_i = [Fraction(0)] * k
    for j, b in enumerate(base_comp):
        rot_i[b] += ci.rot_i[j]
        sl_i[b] += ci.sl_i[j]
    return CoverClassical(ci.tb, ci.rot, ci.sl, tuple(rot_i), tuple(sl_i), P.writhe, P.m, P.l)
