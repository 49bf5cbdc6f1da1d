"""Exact solvers and gadget generators for bounded-length graph recoloring.

Decide whether one proper (list) coloring reaches another within a step
budget, via three interchangeable engines: a breadth-first oracle, a
depth-bounded branching solver, and a fixed-parameter two-stage solver.
The gadgets module builds and certifies the constructions behind the
problem's hardness: interchange graphs, forbidding paths, the list-to-plain
transform, and the two reductions.
"""

from .files import (
    ParseError,
    parse_graph,
    parse_instance,
    parse_sequence,
    serialize_graph,
    serialize_instance,
    serialize_sequence,
)
from .gadgets import (
    BkInstance,
    EdgeGadget,
    ForbiddingPath,
    GadgetError,
    NpInstance,
    PathEmbedding,
    W1Instance,
    admissible_pairs,
    bk_sequence,
    build_bk,
    build_forbidding_path,
    colorguard_check,
    complete_path_coloring,
    gadget_abstraction_check,
    list_to_plain,
    np_reduce,
    np_witness,
    path_colorings,
    shift_path,
    w1_reduce,
    w1_witness,
)
from .graph import (
    ColorLists,
    Coloring,
    EdgeConflict,
    Graph,
    GraphError,
    Instance,
    ListViolation,
    Step,
    Verdict,
    apply_step,
    as_lists,
    check_coloring,
    diff_set,
    full_lists,
    induced_subgraph,
    is_proper,
    reverse_sequence,
    sequence_weight,
    used_color_lists,
    verify_sequence,
)
from .oracle import (
    DEFAULT_NODE_CAP,
    ColoringCodec,
    OracleResult,
    SearchBudgetExceeded,
    oracle_distance,
    reachable_set,
    separator_holds,
)
from .solver_fpt import FptStats, GuessState, list_recolor, recolor
from .solver_xp import XpStats, solve_xp

__version__ = "0.1.0"
