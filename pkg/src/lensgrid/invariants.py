"""The GRID invariants: the classes of x+ and x-, their gradings, and their
behavior under stabilization.

The transverse invariant theta of the positive push-off is the class of x+.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complex import ChainElement, GradingReport, grid_complex
from .dinvariant import d_invariant
from .errors import GradingMismatch, UnsupportedType
from .grid import GridDiagram, Generator, x_minus, x_plus
from .homology import class_is_nonzero_hat, u_unified_nonvanishing
from .legendrian import classical_invariants
from .maps import Destabilization
from .moves import destabilization_sites, destabilize, stabilize

__all__ = [
    "GridInvariantBundle", "StabilizationReport", "d_invariant", "formula_gradings",
    "grid_invariant_gradings", "stabilization_behavior", "x_minus", "x_plus",
]


def formula_gradings(d: GridDiagram, sign: int) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Maslov grading and per-component Alexander gradings predicted for
    x+ (sign = +1) or x- (sign = -1) from the classical invariants."""
    ci = classical_invariants(d)
    m = ci.tb - sign * ci.rot + Fraction(1, d.p) - d_invariant(d.p, d.q, d.q - 1)
    a = tuple((t - sign * r + 1) / 2 for t, r in zip(ci.tb_i, ci.rot_i))
    return m, a


@dataclass(frozen=True)
class GridInvariantBundle:
    x_plus: Generator
    x_minus: Generator
    lambda_plus: GradingReport
    lambda_minus: GradingReport
    hat_nonzero_plus: bool
    hat_nonzero_minus: bool
    u_tower_plus: bool
    u_tower_minus: bool

    @property
    def theta(self) -> GradingReport:
        return self.lambda_plus


def grid_invariant_gradings(d: GridDiagram, hat: bool = True) -> GridInvariantBundle:
    """Gradings of x+ and x- from the complex, checked against the closed
    forms in tb, rot and d(p, q, q-1). Any disagreement raises."""
    C = grid_complex(d)
    xs = {1: x_plus(d), -1: x_minus(d)}
    reports = {}
    for sign, x in xs.items():
        g = C.grading(x)
        m, a = formula_gradings(d, sign)
        if not g.anchored or g.maslov != m or g.alexander != a:
            which = "x+" if sign == 1 else "x-"
            raise GradingMismatch(
                f"{which}: complex gives M={g.maslov}, A={list(map(str, g.alexander))}; "
                f"formula gives M={m}, A={list(map(str, a))}")
        reports[sign] = g
    return GridInvariantBundle(
        x_plus=xs[1], x_minus=xs[-1],
        lambda_plus=reports[1], lambda_minus=reports[-1],
        hat_nonzero_plus=class_is_nonzero_hat(d, xs[1]) if hat else False,
        hat_nonzero_minus=class_is_nonzero_hat(d, xs[-1]) if hat else False,
        u_tower_plus=u_unified_nonvanishing(d, xs[1]),
        u_tower_minus=u_unified_nonvanishing(d, xs[-1]),
    )


@dataclass(frozen=True)
class StabilizationReport:
    """How x+ and x- of a stabilized diagram map to the original diagram.

    A relation is "preserved" when the destabilization map sends the class
    to the same class of the original diagram, "U" when it lands on a
    single U multiple of it, and "other" otherwise. Shifts are the change
    (Maslov, collapsed Alexander) from the original to the stabilized cycle.
    """

    stab_type: str
    row: int
    stabilized: GridDiagram
    plus: str
    minus: str
    plus_shift: tuple[Fraction, Fraction]
    minus_shift: tuple[Fraction, Fraction]


def _relation(image: ChainElement, target: Generator) -> str:
    terms = list(image.terms)
    if len(terms) != 1 or terms[0][0] != target:
        return "other"
    k = sum(terms[0][1])
    return "preserved" if k == 0 else "U" if k == 1 else "other"


def stabilization_behavior(d: GridDiagram, stab_type: str, row: int = 0) -> StabilizationReport:
    """Stabilize, then push x+ and x- of the result back through the
    destabilization map. Only the types that change the invariants,
    W:SE and W:NW, are supported."""
    if stab_type not in ("W:SE", "W:NW"):
        raise UnsupportedType(f"{stab_type} preserves both invariants; only W:SE and W:NW are reported")
    d2 = stabilize(d, stab_type, row)
    site = next(s for s in destabilization_sites(d2)
                if s.stab_type == stab_type and destabilize(d2, s.stab_type, s.row, s.slot) == d)
    D = Destabilization(d2, site)
    b1 = grid_invariant_gradings(d, hat=False)
    b2 = grid_invariant_gradings(d2, hat=False)
    out = {}
    for name, x2, x1, g2, g1 in (("plus", b2.x_plus, b1.x_plus, b2.lambda_plus, b1.lambda_plus),
                                 ("minus", b2.x_minus, b1.x_minus, b2.lambda_minus, b1.lambda_minus)):
        rel = _relation(D.map(ChainElement.generator(x2, d2.n)), x1)
        out[name] = rel, (g2.maslov - g1.maslov, g2.collapsed - g1.collapsed)
    return StabilizationReport(stab_type, row, d2, out["plus"][0], out["minus"][0],
                               out["plus"][1], out["minus"][1])
