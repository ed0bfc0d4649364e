"""Exact independence-polynomial invariants and decycling bounds for small graphs."""

from .budget import Budget, BudgetExceededError, DEFAULT_EXPANSIONS
from .graph import (
    Graph,
    bits,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    mask_of,
    path_graph,
)
from .graph6 import (
    Graph6Error,
    enumerate_labeled_graphs,
    format_edge_list,
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .indpoly import (
    ORACLE_CAP,
    alternating_number,
    independence_polynomial,
    independent_set_count,
    oracle_polynomial,
)
from .cycles import (
    CycleReport,
    DEFAULT_CYCLE_CAP,
    chordless_cycles,
    has_cycle_length_not_div3,
    is_ternary,
)
from .decycling import (
    DecyclingResult,
    cyclomatic_number,
    decycling_summary,
    middle_bound,
    min_decycling,
    min_ternary_decycling,
    minimal_ternary_decycling_sets,
)
from .bounds import (
    BoundsReport,
    CheckResult,
    CHECK_NAMES,
    run_corpus,
    summarize,
    verify_graph,
)
from .constructions import (
    ConstructionError,
    GadgetRecipe,
    attach_pendant_path,
    bridge_gadget,
    build_recipe,
    doubler_attach,
    doubler_chain,
    glue_triangle,
    realize,
    sign_flip_extend,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BudgetExceededError",
    "DEFAULT_EXPANSIONS",
    "Graph",
    "bits",
    "mask_of",
    "empty_graph",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "disjoint_union",
    "Graph6Error",
    "parse_graph6",
    "to_graph6",
    "iter_graph6",
    "parse_edge_list",
    "format_edge_list",
    "enumerate_labeled_graphs",
    "ORACLE_CAP",
    "independence_polynomial",
    "alternating_number",
    "independent_set_count",
    "oracle_polynomial",
    "CycleReport",
    "DEFAULT_CYCLE_CAP",
    "chordless_cycles",
    "is_ternary",
    "has_cycle_length_not_div3",
    "DecyclingResult",
    "cyclomatic_number",
    "min_decycling",
    "min_ternary_decycling",
    "minimal_ternary_decycling_sets",
    "middle_bound",
    "decycling_summary",
    "BoundsReport",
    "CheckResult",
    "CHECK_NAMES",
    "verify_graph",
    "run_corpus",
    "summarize",
    "ConstructionError",
    "GadgetRecipe",
    "build_recipe",
    "attach_pendant_path",
    "sign_flip_extend",
    "bridge_gadget",
    "doubler_attach",
    "glue_triangle",
    "doubler_chain",
    "realize",
]
