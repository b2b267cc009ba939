"""Single-processor scheduling under the B-constraint."""

from ._core import (
    ExactResult,
    Instance,
    PartitionInstance,
    PtasResult,
    ReductionImage,
    ScheduleTrace,
    TrschedError,
    __version__,
    build_reduction,
    build_witness_schedule,
    check_feasible,
    check_feasible_geometric,
    check_lpt_bound,
    check_prefix_dominance,
    decide_partition,
    evaluate_greedy,
    extract_partition,
    idle_ladder,
    lower_bound,
    lpt_schedule,
    ptas_solve,
    run_cli,
    solve_exact,
    solve_exact_unpruned,
    trace_from_gaps,
)

__all__ = [
    "ExactResult",
    "Instance",
    "PartitionInstance",
    "PtasResult",
    "ReductionImage",
    "ScheduleTrace",
    "TrschedError",
    "__version__",
    "build_reduction",
    "build_witness_schedule",
    "check_feasible",
    "check_feasible_geometric",
    "check_lpt_bound",
    "check_prefix_dominance",
    "decide_partition",
    "evaluate_greedy",
    "extract_partition",
    "idle_ladder",
    "lower_bound",
    "lpt_schedule",
    "ptas_solve",
    "run_cli",
    "solve_exact",
    "solve_exact_unpruned",
    "trace_from_gaps",
]
