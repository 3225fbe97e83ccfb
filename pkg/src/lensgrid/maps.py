"""Chain maps induced by grid moves.

The commutation map counts empty pentagons. Pentagons are found in the
S^3 cover, in a frame where the commuted pair of curves is vertical and
sources sit at the lower left and upper right corners (columns are
mirrored; for row commutations the cover is also transposed). In that
frame the new curve gamma agrees with beta away from two crossings; the
pentagon corner is the crossing where gamma passes, going up, from the
left of beta to its right.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex import ChainElement, Exponents, _rectangles_from, grid_complex
from .errors import DomainError, NotACommutationPair, WrongStabilizationType
from .grid import GridDiagram, Generator, lift_cover, lift_generator, project_vertex
from .moves import GridMove, apply_move


@dataclass(frozen=True)
class Pentagon:
    source: Generator
    target: Generator
    side: str                 # "R" region right of beta/gamma, "L" left
    z_mult: tuple[int, ...]
    w_mult: tuple[int, ...]
    empty: bool


class _Frame:
    """Cover of a diagram seen from the book frame of one commutation."""

    def __init__(self, d: GridDiagram, move: GridMove):
        if move.kind not in ("commute-cols", "commute-rows"):
            raise NotACommutationPair(f"{move} is not a commutation")
        self.d = d
        n, N, q = d.n, d.N, d.q
        self.n, self.N, self.p = n, N, d.p
        self.rows_case = move.kind == "commute-rows"
        k = move.index % n
        cover = lift_cover(d)
        self.cover = cover
        # lifts of the curve being replaced, in frame coordinates
        self.lines = [(-(k + 1 + n * j)) % N for j in range(d.p)]
        marks = []
        for R in range(N):
            marks.append((*self.cell(R, cover.z[R]), R % n, "z"))
            marks.append((*self.cell(R, cover.w[R]), R % n, "w"))
        self.marks = marks
        if self.rows_case:
            self.deck = lambda r, c, t: ((r + q * n * t) % N, (c - n * t) % N)
        else:
            self.deck = lambda r, c, t: ((r + n * t) % N, (c - q * n * t) % N)

    def vertex(self, R, C):
        N = self.N
        if self.rows_case:
            return C % N, (-R) % N
        return R % N, (-C) % N

    def cell(self, R, C):
        N = self.N
        if self.rows_case:
            return C % N, N - 1 - R % N
        return R % N, N - 1 - C % N

    def to_frame(self, cols: list[int]) -> list[int]:
        out = [0] * self.N
        for R, C in enumerate(cols):
            r, c = self.vertex(R, C)
            out[r] = c
        return out

    def from_frame(self, fcols: list[int]) -> list[int]:
        N = self.N
        out = [0] * N
        for r, c in enumerate(fcols):
            if self.rows_case:
                out[(-c) % N] = r
            else:
                out[r] = (-c) % N
        return out

    def gamma_side(self, b: int, placement: str):
        """Return (theta height, rows where gamma passes right of beta) for
        the lift at frame line b. Heights are in units of rows; basepoints
        sit at half-integer heights."""
        N = self.N
        right = sorted(r for r, c, _, _ in self.marks if c == b)
        left = sorted(r for r, c, _, _ in self.marks if c == (b - 1) % N)

        def arc(a, e):
            return {(a + t) % N for t in range((e - a) % N + 1)}

        u1, u2 = right
        if not arc(u1, u2) & set(left):
            start, end = u1, u2
        else:
            start, end = u2, u1
        rows = arc(start, end)
        if rows & set(left):
            raise NotACommutationPair("commuted segments interleave")
        if placement == "upper":
            # just below the lowest right-column basepoint of the arc
            theta = start + 0.25
        else:
            # just above the highest left-column basepoint below the arc
            low = start
            while (low - 1) % N not in left:
                low = (low - 1) % N
            theta = (low - 1) % N + 0.75
        return theta, rows


def pentagons_from(d: GridDiagram, move: GridMove, x: Generator,
                   placement: str = "upper") -> list[Pentagon]:
    """All pentagons with source x for the commutation ``move``, with the
    target expressed as a generator of the commuted diagram."""
    F = _Frame(d, move)
    n, N, p = F.n, F.N, F.p
    xcols = F.to_frame(lift_generator(d, tuple(x)))
    b = F.lines[0]
    theta, right_rows = F.gamma_side(b, placement)
    r0 = xcols.index(b)
    out = []
    for side in ("R", "L"):
        for other in range(N):
            if (other - r0) % n == 0:
                continue
            if side == "R":
                Rb, Rt = r0, other
                v = xcols[Rt]
                W = (v - b) % N
                new = ((Rt, b), (Rb, v))
            else:
                Rb, Rt = other, r0
                v = xcols[Rb]
                W = (b - v) % N
                new = ((Rb, b), (Rt, v))
            if (v - b) % n == 0:
                continue
            H = (Rt - Rb) % N
            k_theta = (theta - Rb) % N
            if not k_theta < H:
                continue
            ycols = list(xcols)
            for t in range(p):
                for (r, c) in new:
                    r2, c2 = F.deck(r, c, t)
                    ycols[r2] = c2
            lo = b if side == "R" else v

            def interior(r, c):
                return 0 < (r - Rb) % N < H and 0 < (c - lo) % N < W

            empty = not any(interior(r, c) for r, c in enumerate(xcols)) and \
                not any(interior(r, c) for r, c in enumerate(ycols))
            z_mult = [0] * n
            w_mult = [0] * n
            for r, c, label, kind in F.marks:
                h = (r - Rb) % N
                if h >= H:
                    continue
                if side == "R":
                    gamma_row = h + 0.5 > k_theta
                    j = (c - b) % N
                    if 1 <= j <= W - 1:
                        inside = True
                    elif j == 0:
                        inside = not (gamma_row and r in right_rows)
                    elif j == N - 1:
                        inside = gamma_row and r not in right_rows
                    else:
                        inside = False
                else:
                    gamma_row = h + 0.5 < k_theta
                    j = (c - v) % N
                    if j == W - 1:
                        inside = not (gamma_row and r not in right_rows)
                    elif j <= W - 2:
                        inside = True
                    elif j == W:
                        inside = gamma_row and r in right_rows
                    else:
                        inside = False
                if inside:
                    (z_mult if kind == "z" else w_mult)[label] += 1
            cols = F.from_frame(ycols)
            y = tuple(project_vertex(d, i, cols[i])[1] for i in range(n))
            out.append(Pentagon(tuple(x), y, side, tuple(z_mult), tuple(w_mult), empty))
    return out


def commutation_map(d: GridDiagram, move: GridMove, fixes: str = "+"):
    """The pentagon chain map CFK^-(d) -> CFK^-(d') for a commutation.

    Returns (d', f) where f maps ChainElements of d to those of d'.

    The corner crossing of gamma may sit anywhere between the basepoints
    that bound it, and the pentagon count depends on where. ``fixes="+"``
    places it so that x+ maps to x+ on the nose, ``fixes="-"`` so that x-
    maps to x-. The two maps are chain homotopic.
    """
    if fixes not in ("+", "-"):
        raise ValueError("fixes must be '+' or '-'")
    upper = (fixes == "+") == (move.kind == "commute-cols")
    placement = "upper" if upper else "lower"
    d2 = apply_move(d, move)
    cache: dict[Generator, list[tuple[Generator, Exponents]]] = {}

    def terms(x):
        if x not in cache:
            cache[x] = [(pg.target, pg.z_mult) for pg in pentagons_from(d, move, x, placement)
                        if pg.empty and not any(pg.w_mult)]
        return cache[x]

    # a row commutation moves the basepoints of rows i, i+1 to rows i+1, i;
    # U variables follow their basepoints
    n = d.n
    where = list(range(n))
    if move.kind == "commute-rows":
        i = move.index % n
        where[i], where[(i + 1) % n] = (i + 1) % n, i

    def relabel(e):
        out = [0] * n
        for r, k in enumerate(e):
            out[where[r]] = k
        return tuple(out)

    def f(elem: ChainElement) -> ChainElement:
        acc = set()
        for x, e in elem.terms:
            for y, zm in terms(x):
                acc ^= {(y, relabel(tuple(a + b for a, b in zip(e, zm))))}
        return ChainElement._raw(acc)

    return d2, f


def check_chain_map(d: GridDiagram, move: GridMove, fixes: str = "+") -> bool:
    d2, f = commutation_map(d, move, fixes)
    C1, C2 = grid_complex(d), grid_complex(d2)
    for x in C1.generators:
        gx = ChainElement.generator(x, d.n)
        if C2.boundary(f(gx)) != f(C1.boundary(gx)):
            return False
    return True


# -- destabilization ----------------------------------------------------------

class Destabilization:
    """Chain level data relating a stabilized diagram d2 to d = destab(d2).

    ``eta`` is the corner shared by the four cells of the stabilization
    block. Generators through eta form I, the rest form N. ``e`` drops the
    eta component; ``pi`` identifies the new U variable with the U of the
    row that keeps the original z (or w) basepoint.
    """

    def __init__(self, d2: GridDiagram, site):
        from .moves import destabilize

        kind, corner = site.stab_type.split(":")
        if kind != "W":
            raise WrongStabilizationType(f"{site.stab_type} is not a stabilization at w")
        self.d2 = d2
        self.site = site
        self.d = destabilize(d2, site.stab_type, site.row, site.slot)
        n2 = d2.n
        self.row, self.L = site.row, site.slot % d2.N
        self.c = self.L % n2
        self.eta_row = self.row + 1
        self.eta = (self.L + 1 - d2.q * self.eta_row) % d2.N
        e_row = self.row + 1 if corner[0] == "N" else self.row
        o_row = self.row if corner[0] == "N" else self.row + 1
        self.kind = site.stab_type
        # rows of d2 -> rows of d for U variables; the new z sits in o_row
        umap = []
        for r in range(n2):
            if r == o_row:
                umap.append(self.row)            # pi: U_0 = U of the kept z
            elif r == e_row:
                umap.append(self.row)
            else:
                umap.append(r if r < self.row else r - 1)
        self.umap = umap
        self.new_z_row = o_row
        # the two w basepoints of the block
        self.w_rows = (e_row, o_row)

    def in_I(self, y: Generator) -> bool:
        return y[self.eta_row] == self.eta

    def e(self, y: Generator) -> Generator:
        """Generator of d corresponding to y in I."""
        d2, d = self.d2, self.d
        n2, c = d2.n, self.c
        out = []
        for r in range(n2):
            if r == self.eta_row:
                continue
            s = (y[r] + d2.q * r) % d2.N
            t, j = divmod(s, n2)
            j = j if j <= c else j - 1
            r1 = r if r < self.eta_row else r - 1
            out.append((j + d.n * t - d.q * r1) % d.N)
        return tuple(out)

    def pi(self, exps) -> tuple[int, ...]:
        out = [0] * self.d.n
        for r, k in enumerate(exps):
            out[self.umap[r]] += k
        return tuple(out)

    def H(self, x: Generator, w1_row: int) -> list[tuple[Generator, tuple[int, ...]]]:
        """Rectangles from x in N to I containing exactly the w of row w1_row."""
        want = tuple(1 if r == w1_row else 0 for r in range(self.d2.n))
        return [(r.target, r.z_mult) for r in _rectangles_from(self.d2, x, avoid_w=False)
                if r.empty and r.w_mult == want and self.in_I(r.target)]

    def map(self, elem: ChainElement, w1_row: int | None = None) -> ChainElement:
        """pi o e o H on N for W:NW and W:SE, pi o e on I for W:NE and W:SW.

        ``w1_row`` picks which of the two w basepoints of the block the
        rectangles of H must contain; either choice gives a chain map.
        """
        acc = set()
        through_H = self.kind in ("W:NW", "W:SE")
        if w1_row is None:
            w1_row = self.w_rows[0]
        for x, ex in elem.terms:
            if through_H:
                if self.in_I(x):
                    raise DomainError("element has components outside N")
                for y, zm in self.H(x, w1_row):
                    acc ^= {(self.e(y), self.pi(tuple(a + b for a, b in zip(ex, zm))))}
            else:
                if not self.in_I(x):
                    raise DomainError("element has components outside I")
                acc ^= {(self.e(x), self.pi(ex))}
        return ChainElement._raw(acc)


def destabilization_map(d2: GridDiagram, site):
    """Return (d, f): the destabilized diagram and the map CFK^-(d2) -> CFK^-(d)
    on the subcomplex where it is defined."""
    D = Destabilization(d2, site)
    return D.d, D.map
