"""Extremal workbench for ordered and cyclically ordered r-uniform hypergraphs.

Data model and file format: core.  Forbidden configurations: patterns.
Order-preserving containment: containment.  Extremal families:
constructions.  Closed forms and certificates: bounds.  Exact optimum by
branch and bound: solver.  Reproducible experiment surface: cli / verification.
"""

from .core import (
    CYCLIC,
    LINEAR,
    Edge,
    Hypergraph,
    OrderKind,
    edge_sum_mod,
    make_hypergraph,
    parse,
    rotate,
    serialize,
    shadow,
    with_order,
)
from .patterns import (
    Pattern,
    crossing_matching_pattern,
    crossing_path_pattern,
    custom_pattern,
    parse_pattern,
    serialize_pattern,
)
from .containment import (
    Embedding,
    contains_crossing_path_fast,
    count_copies,
    enumerate_copies_complete,
    find_embedding,
    is_free,
)
from .constructions import (
    GapParams,
    gen_consecutive,
    gen_gap_free,
    gen_interior_consecutive,
    gen_matching_lower,
    gen_modular_slice,
    gen_pow2_gap,
    gen_star,
    has_km_gaps,
)
from .bounds import (
    BoundReport,
    ex_cg_matching_report,
    ex_cg_path_report,
    ex_ordered_path_exact,
    ex_ordered_path_recurrence_ub,
    gap_threshold,
    interval_bound,
    meets_gap_threshold,
    p2_injectivity_check,
    t_param,
    tk_count,
    zigzag_certificate,
)
from .solver import (
    ConflictInstance,
    SolveResult,
    build_conflicts,
    solve_exact,
    solve_interval,
    verify_witness,
)

__version__ = "0.1.0"
