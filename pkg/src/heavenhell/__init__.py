"""Forced-hub binary consensus on weighted digraphs.

A designated hub (or seed set) is pinned to Glory before every update;
other nodes adopt Glory when their weighted Glory score plus tolerance
covers their Gnash score.  The package pairs closed-form one-step
thresholds with an exhaustive small-instance oracle, plus generators
for the standard experiment families and an ``hh`` command line.
"""

from .dynamics import (
    ALL_GNASH,
    State,
    TiePolicy,
    all_glory_state,
    covers_all_nonhubs,
    force_seed,
    glory_count,
    is_all_glory,
    next_state,
    next_state_majority,
    run_schedule,
    run_sync,
    schedule_states,
    scores,
    state_from_literal,
    state_to_literal,
    sync_step,
)
from .generators import (
    GenSpec,
    attach_hub,
    attach_seed_split,
    gen_adversarial_hetero,
    gen_ba,
    gen_grid,
    gen_ring,
)
from .graph import (
    GraphFormatError,
    Tolerance,
    WeightedDigraph,
    format_graph_text,
    load_graph,
    parse_graph_text,
    save_graph,
    validate_seeds,
)
from .oracle import (
    CAPACITY,
    CapacityError,
    OracleVerdict,
    exhaustive_one_step,
    oracle_threshold_search,
    worst_case_is_all_gnash_check,
)
from .thresholds import (
    NodeNeed,
    ThresholdReport,
    classical_bound,
    max_need,
    pointwise_degmax_bound,
    seeded_one_step_holds,
    threshold_report,
    tolerance_monotonicity_check,
    uniform_one_step_holds,
)

__all__ = [
    "ALL_GNASH",
    "CAPACITY",
    "CapacityError",
    "GenSpec",
    "GraphFormatError",
    "NodeNeed",
    "OracleVerdict",
    "State",
    "ThresholdReport",
    "TiePolicy",
    "Tolerance",
    "WeightedDigraph",
    "all_glory_state",
    "attach_hub",
    "attach_seed_split",
    "classical_bound",
    "covers_all_nonhubs",
    "exhaustive_one_step",
    "force_seed",
    "format_graph_text",
    "gen_adversarial_hetero",
    "gen_ba",
    "gen_grid",
    "gen_ring",
    "glory_count",
    "is_all_glory",
    "load_graph",
    "max_need",
    "next_state",
    "next_state_majority",
    "oracle_threshold_search",
    "parse_graph_text",
    "pointwise_degmax_bound",
    "run_schedule",
    "run_sync",
    "save_graph",
    "schedule_states",
    "scores",
    "seeded_one_step_holds",
    "state_from_literal",
    "state_to_literal",
    "sync_step",
    "threshold_report",
    "tolerance_monotonicity_check",
    "uniform_one_step_holds",
    "validate_seeds",
    "worst_case_is_all_gnash_check",
]
