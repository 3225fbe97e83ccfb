"""Grid homology and GRID invariants for links in lens spaces."""

from .berge import QuadrupleReport, berge_verdict, floer_simple_check, quadruple_invariants
from .complex import (
    ChainElement,
    GradingReport,
    Parallelogram,
    alexander,
    boundary_minus,
    grading,
    grid_complex,
    maslov,
    parallelograms,
    parallelograms_from,
)
from .dinvariant import d_invariant
from .errors import *  # noqa: F401,F403
from .formats import emit_lgrid, emit_moves, parse_lgrid, parse_moves, read_lgrid
from .grid import (
    CoverGrid,
    Generator,
    GridDiagram,
    core_knot_diagram,
    cover_diagram,
    dualize,
    enumerate_generators,
    generator_count,
    lift_cover,
    lift_generator,
    simple_knot_diagram,
    spinc_difference,
    spinc_label,
    validate,
    x_minus,
    x_plus,
)
from .homology import HatHomology, class_is_nonzero_hat, homology_hat, tilde_rank, u_unified_nonvanishing
from .invariants import (
    GridInvariantBundle,
    StabilizationReport,
    formula_gradings,
    grid_invariant_gradings,
    stabilization_behavior,
)
from .legendrian import (
    BraidWord,
    ClassicalInvariants,
    CoverClassical,
    RectilinearProjection,
    braid_word,
    classical_invariants,
    cover_classical,
    rectilinear_projection,
    sl_from_braid,
)
from .maps import Destabilization, check_chain_map, commutation_map, destabilization_map, pentagons_from
from .moves import (
    STAB_TYPES,
    DestabSite,
    GridMove,
    apply_move,
    commute_columns,
    commute_rows,
    destabilization_sites,
    destabilize,
    legality_of,
    stabilize,
)
