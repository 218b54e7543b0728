"""Exact 0-1 knapsack toolkit built around the extended Dembo-Hammer reduction."""

from edhr._core import (
    BenchRow,
    BudgetExceeded,
    EnumerationBlowup,
    Instance,
    InvalidInstance,
    ParseError,
    Partition,
    SearchStats,
    Solution,
    SortedInstance,
    Subproblem,
    __version__,
    break_solution_lower_bound,
    dantzig_upper_bound,
    density_order_intact,
    dhr_partition,
    edhr_partition,
    emit_report,
    evaluate,
    export_lp,
    generate,
    make_adversary,
    normalize_and_sort,
    read_instance,
    read_jooken,
    run_bench,
    solve,
    solve_exhaustive,
    write_instance,
    write_jooken,
)

__all__ = [
    "BenchRow",
    "BudgetExceeded",
    "EnumerationBlowup",
    "Instance",
    "InvalidInstance",
    "ParseError",
    "Partition",
    "SearchStats",
    "Solution",
    "SortedInstance",
    "Subproblem",
    "__version__",
    "break_solution_lower_bound",
    "dantzig_upper_bound",
    "density_order_intact",
    "dhr_partition",
    "edhr_partition",
    "emit_report",
    "evaluate",
    "export_lp",
    "generate",
    "make_adversary",
    "normalize_and_sort",
    "read_instance",
    "read_jooken",
    "run_bench",
    "solve",
    "solve_exhaustive",
    "write_instance",
    "write_jooken",
]
