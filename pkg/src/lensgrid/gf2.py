"""Dense linear algebra over F2 with Python ints as bit vectors."""

from __future__ import annotations

from typing import Iterable


class Basis:
    """Incrementally reduced basis of a subspace of F2^m.

    Vectors are ints; bit j is coordinate j. Stored rows have distinct
    leading bits, which is all that reduction needs.
    """

    def __init__(self):
        self.rows: dict[int, int] = {}

    def reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            row = self.rows.get(top)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """Insert v. Returns False if v was already in the span."""
        v = self.reduce(v)
        if not v:
            return False
        self.rows[v.bit_length() - 1] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self.rows)


def rank(vectors: Iterable[int]) -> int:
    b = Basis()
    for v in vectors:
        b.add(v)
    return len(b)


def kernel(columns: list[int], n_cols: int | None = None) -> list[int]:
    """Basis of the kernel of the map sending basis vector j to columns[j].

    Kernel vectors are returned as ints over the source coordinates.
    """
    if n_cols is None:
        n_cols = len(columns)
    pivots: dict[int, tuple[int, int]] = {}
    out = []
    for j in range(n_cols):
        v, tag = columns[j], 1 << j
        while v:
            top = v.bit_length() - 1
            hit = pivots.get(top)
            if hit is None:
                pivots[top] = (v, tag)
                break
            v ^= hit[0]
            tag ^= hit[1]
        if not v:
            out.append(tag)
    return out


def homology_rank(d_in: list[int], d_out: list[int], dim: int) -> int:
    """dim ker(d_out) - rank(d_in) for C_{k+1} -> C_k -> C_{k-1}.

    d_in lists the images of the basis of C_{k+1} as vectors over C_k.
    d_out lists the images of the basis of C_k (dim entries).
    """
    return dim - rank(d_out) - rank(d_in)
