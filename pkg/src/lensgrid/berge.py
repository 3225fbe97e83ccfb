"""Index-one test for knots with S^3 surgeries.

For a knot in L(p, q) admitting an S^3 surgery, a grid diagram is index one
exactly when the hat classes of x+ and x- are nonzero on both the diagram
and its dual. The forward direction holds for every index-one diagram, so
vanishing of any of the four classes rules index one out.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import GridDiagram, dualize, x_minus, x_plus
from .homology import class_is_nonzero_hat, homology_hat

CONSISTENT_INDEX_ONE = "ConsistentIndexOne"
OBSTRUCTION_FOUND = "ObstructionFound"
INCONCLUSIVE = "Inconclusive"
COUNTEREXAMPLE = "Counterexample"


@dataclass(frozen=True)
class QuadrupleReport:
    hat_plus: bool
    hat_minus: bool
    hat_plus_dual: bool
    hat_minus_dual: bool
    index_one: bool
    floer_simple: bool
    verdict: str

    @property
    def all_nonzero(self) -> bool:
        return self.hat_plus and self.hat_minus and self.hat_plus_dual and self.hat_minus_dual


def floer_simple_check(d: GridDiagram) -> bool:
    """Total hat rank equals p."""
    return homology_hat(d).rank == d.p


def _verdict(all_nonzero: bool, index_one: bool, assume_s3_surgery: bool) -> str:
    if not all_nonzero:
        return OBSTRUCTION_FOUND
    if index_one:
        return CONSISTENT_INDEX_ONE
    # all four classes survive on a diagram of index > 1: with the surgery
    # hypothesis this contradicts the index-one characterization, so it is
    # reported as such
    return COUNTEREXAMPLE if assume_s3_surgery else INCONCLUSIVE


def quadruple_invariants(d: GridDiagram, assume_s3_surgery: bool = False) -> QuadrupleReport:
    dual = dualize(d)
    hp = class_is_nonzero_hat(d, x_plus(d))
    hm = class_is_nonzero_hat(d, x_minus(d))
    hpd = class_is_nonzero_hat(dual, x_plus(dual))
    hmd = class_is_nonzero_hat(dual, x_minus(dual))
    index_one = d.n == 1
    verdict = _verdict(hp and hm and hpd and hmd, index_one, assume_s3_surgery)
    return QuadrupleReport(hp, hm, hpd, hmd, index_one, floer_simple_check(d), verdict)


def berge_verdict(d: GridDiagram, assume_s3_surgery: bool) -> str:
    return quadruple_invariants(d, assume_s3_surgery).verdict
