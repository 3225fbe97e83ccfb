"""Elementary grid moves: commutations and the eight (de)stabilizations."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Interleaved, NoSuchSite, PatternMismatch
from .grid import GridDiagram, lift_cover

STAB_TYPES = ("W:NW", "W:NE", "W:SW", "W:SE", "Z:NW", "Z:NE", "Z:SW", "Z:SE")

TOPOLOGICAL, LEGENDRIAN, TRANSVERSE, BRAID = "topological", "legendrian", "transverse", "braid"


@dataclass(frozen=True)
class GridMove:
    kind: str                 # commute-cols, commute-rows, stab, destab
    index: int = 0            # column, row, or stabilization row
    stab_type: str = ""       # for stab / destab
    slot: int = -1            # destab: lower left slot of the 2x2 block

    @property
    def legality(self) -> frozenset[str]:
        if self.kind in ("commute-cols", "commute-rows"):
            return frozenset({TOPOLOGICAL, LEGENDRIAN, TRANSVERSE, BRAID})
        return legality_of(self.stab_type)

    def __str__(self) -> str:
        if self.kind in ("commute-cols", "commute-rows"):
            return f"{self.kind} {self.index}"
        if self.kind == "stab":
            return f"stab {self.stab_type} {self.index}"
        return f"destab {self.stab_type}@{self.index},{self.slot}"


def legality_of(stab_type: str) -> frozenset[str]:
    out = {TOPOLOGICAL}
    if stab_type in ("W:NE", "W:SW"):
        out |= {LEGENDRIAN, TRANSVERSE}
    if stab_type == "W:SE":
        out |= {TRANSVERSE, BRAID}
    if stab_type == "W:SW":
        out.add(BRAID)
    return frozenset(out)


def apply_move(d: GridDiagram, move: GridMove) -> GridDiagram:
    if move.kind == "commute-cols":
        return commute_columns(d, move.index)
    if move.kind == "commute-rows":
        return commute_rows(d, move.index)
    if move.kind == "stab":
        return stabilize(d, move.stab_type, move.index)
    if move.kind == "destab":
        return destabilize(d, move.stab_type, move.index, move.slot)
    raise NoSuchSite(f"unknown move {move.kind!r}")


# -- symmetries of the torus --------------------------------------------------

def rotate_rows(d: GridDiagram, k: int = 1) -> GridDiagram:
    """Relabel rows so that old row r becomes row r - k (a translation of
    the torus by -k/n vertically)."""
    z, w = list(d.z), list(d.w)
    for _ in range(k % d.n):
        z = [s - d.q for s in z[1:]] + [z[0] - d.q + d.q * d.n]
        w = [s - d.q for s in w[1:]] + [w[0] - d.q + d.q * d.n]
    return d.with_slots(z, w)


def shift_columns(d: GridDiagram, k: int = 1) -> GridDiagram:
    """Translate the torus horizontally by k slots."""
    return d.with_slots([s + k for s in d.z], [s + k for s in d.w])


# -- commutations -------------------------------------------------------------

def _interleaved(a: tuple[int, int], b: tuple[int, int], N: int) -> bool:
    """Do the endpoints of two chords of Z_N alternate (or touch)?"""
    if len({a[0], a[1], b[0], b[1]}) < 4:
        return True

    def inside(t, lo, hi):
        return 0 < (t - lo) % N < (hi - lo) % N

    return inside(b[0], *a) != inside(b[1], *a)


def commute_columns(d: GridDiagram, c: int) -> GridDiagram:
    """Exchange the basepoints of columns c and c+1 (mod n)."""
    n, N = d.n, d.N
    c %= n
    c2 = (c + 1) % n
    if n < 2:
        raise NoSuchSite("index one diagrams have a single column")
    cover = lift_cover(d)
    # endpoints of the vertical segments in the adjacent cover columns c, c+1
    seg1 = (cover.w_row_of_col[c], cover.z_row_of_col[c])
    seg2 = (cover.w_row_of_col[(c + 1) % N], cover.z_row_of_col[(c + 1) % N])
    if _interleaved(seg1, seg2, N):
        raise Interleaved(f"columns {c} and {c2} interleave")
    z = [s + 1 if s % n == c else s - 1 if s % n == c2 else s for s in d.z]
    w = [s + 1 if s % n == c else s - 1 if s % n == c2 else s for s in d.w]
    return d.with_slots(z, w)


def commute_rows(d: GridDiagram, i: int) -> GridDiagram:
    """Exchange the basepoints of rows i and i+1 (mod n)."""
    n, N = d.n, d.N
    if n < 2:
        raise NoSuchSite("index one diagrams have a single row")
    i %= n
    cover = lift_cover(d)
    seg1 = (cover.z[i], cover.w[i])
    seg2 = (cover.z[(i + 1) % N], cover.w[(i + 1) % N])
    if _interleaved(seg1, seg2, N):
        raise Interleaved(f"rows {i} and {(i + 1) % n} interleave")
    z, w = list(d.z), list(d.w)
    j = (i + 1) % n
    wrap = d.q * n if j == 0 else 0
    z[i], z[j] = d.z[j] + wrap, d.z[i] - wrap
    w[i], w[j] = d.w[j] + wrap, d.w[i] - wrap
    return d.with_slots(z, w)


# -- stabilization ------------------------------------------------------------

def _slot_up(s: int, c: int, n: int) -> int:
    """Slot map when column c is split in two (left half keeps index c)."""
    t, j = divmod(s, n)
    return (j if j <= c else j + 1) + (n + 1) * t


def stabilize(d: GridDiagram, stab_type: str, row: int) -> GridDiagram:
    """Stabilize at the basepoint of the named kind in the given row.

    The row and column of that basepoint are split; the 2x2 block they
    share gets two basepoints of the named kind on one diagonal, a new
    basepoint of the other kind, and the empty cell named by the ordinal
    direction.
    """
    if stab_type not in STAB_TYPES:
        raise NoSuchSite(f"unknown stabilization type {stab_type!r}")
    n = d.n
    if not 0 <= row < n:
        raise NoSuchSite(f"row {row} out of range")
    kind, corner = stab_type.split(":")
    X, Y = (d.w, d.z) if kind == "W" else (d.z, d.w)
    s = X[row]
    c = s % n
    t = s // n
    L = c + (n + 1) * t
    e_up = corner[0] == "N"
    e_left = corner[1] == "W"
    e_row = row + 1 if e_up else row
    o_row = row if e_up else row + 1
    e_col = L if e_left else L + 1
    o_col = L + 1 if e_left else L
    # the Y basepoint sharing the column of the stabilized X
    y_col_row = next(r for r in range(n) if Y[r] % n == c)

    def newrow(r):
        return r if r <= row else r + 1

    X2 = [0] * (n + 1)
    Y2 = [0] * (n + 1)
    for r in range(n):
        if r == row:
            continue
        X2[newrow(r)] = _slot_up(X[r], c, n)
        if r != y_col_row:
            Y2[newrow(r)] = _slot_up(Y[r], c, n)
    if y_col_row != row:
        ys = Y[y_col_row]
        Y2[newrow(y_col_row)] = c + (0 if e_left else 1) + (n + 1) * (ys // n)
    X2[e_row] = o_col           # cell A: the empty cell's row, other column
    X2[o_row] = e_col           # cell B: other row, the empty cell's column
    Y2[o_row] = o_col           # cell D: diagonal to the empty cell
    ys = Y[row]
    if y_col_row == row:
        # the row's own Y sits in the stabilized column (another sheet)
        Y2[e_row] = c + (0 if e_left else 1) + (n + 1) * (ys // n)
    else:
        Y2[e_row] = _slot_up(ys, c, n)
    z, w = (Y2, X2) if kind == "W" else (X2, Y2)
    return GridDiagram(d.p, d.q, tuple(z), tuple(w))


# -- destabilization ----------------------------------------------------------

@dataclass(frozen=True)
class DestabSite:
    stab_type: str
    row: int      # lower row of the 2x2 block
    slot: int     # slot of the lower left cell of the block

    def __str__(self) -> str:
        return f"{self.stab_type}@{self.row},{self.slot}"


def _block_type(d: GridDiagram, row: int, L: int) -> str | None:
    """Stabilization type of the 2x2 block with lower left cell (row, L),
    where row + 1 < n and L is not in the last column."""
    n = d.n
    cells = {("S", "W"): (row, L), ("S", "E"): (row, L + 1),
             ("N", "W"): (row + 1, L), ("N", "E"): (row + 1, L + 1)}
    mark = {}
    for key, (r, s) in cells.items():
        m = ("W" if d.w[r] == s % d.N else "") + ("Z" if d.z[r] == s % d.N else "")
        mark[key] = m
    empty = [k for k, m in mark.items() if m == ""]
    if len(empty) != 1:
        return None
    er, ec = empty[0]
    orow = "N" if er == "S" else "S"
    ocol = "E" if ec == "W" else "W"
    X = mark[(er, ocol)]
    if X not in ("W", "Z") or mark[(orow, ec)] != X:
        return None
    Y = "Z" if X == "W" else "W"
    if mark[(orow, ocol)] != Y:
        return None
    return f"{X}:{er}{ec}"


def destabilization_sites(d: GridDiagram) -> list[DestabSite]:
    """Blocks that undo a stabilization, within non-wrapping rows and columns."""
    n, N = d.n, d.N
    out = []
    if n < 2:
        return out
    for row in range(n - 1):
        for L in range(N):
            if L % n == n - 1:
                continue
            t = _block_type(d, row, L)
            if t is not None:
                out.append(DestabSite(t, row, L))
    return out


def destabilize(d: GridDiagram, stab_type: str, row: int, slot: int) -> GridDiagram:
    """Inverse of :func:`stabilize` at the block with lower left cell (row, slot)."""
    n = d.n
    if n < 2 or not 0 <= row < n - 1 or slot % n == n - 1:
        raise NoSuchSite(f"no 2x2 block at row {row}, slot {slot}")
    L = slot % d.N
    found = _block_type(d, row, L)
    if found is None:
        raise NoSuchSite(f"no destabilization block at row {row}, slot {slot}")
    if found != stab_type:
        raise PatternMismatch(f"block at row {row}, slot {slot} is {found}, not {stab_type}")
    kind, corner = stab_type.split(":")
    X, Y = (d.w, d.z) if kind == "W" else (d.z, d.w)
    c = L % n
    m = n - 1

    def slot_down(s):
        t, j = divmod(s, n)
        return (j if j <= c else j - 1) + m * t

    e_row = row + 1 if corner[0] == "N" else row
    X2 = [0] * m
    Y2 = [0] * m
    for r in range(n):
        nr = r if r <= row else r - 1
        if r in (row, row + 1):
            continue
        X2[nr] = slot_down(X[r])
        Y2[nr] = slot_down(Y[r])
    X2[row] = slot_down(L)
    Y2[row] = slot_down(Y[e_row])
    z, w = (Y2, X2) if kind == "W" else (X2, Y2)
    return GridDiagram(d.p, d.q, tuple(z), tuple(w))
