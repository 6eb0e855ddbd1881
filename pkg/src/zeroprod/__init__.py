"""Exact combinatorics of matrix chains whose product is zero.

Given a dimension vector (d_0, ..., d_n), this package computes the
codimension C and the number theta of maximal-dimensional components of the
variety of chains A_n ... A_1 = 0 by four independent routes (quadratic
integer program, truncated q-series, closed form, brute force over orbit
codes), constructs each component's lace diagram, Kostant partition, rank
pattern, reduced defining equations, and 0/1 representative chain, and
cross-checks everything exactly.
"""

from .closedform import ClosedFormResult, closed_form, threshold_index
from .errors import (
    InfeasibleVector,
    IntegralityViolation,
    MalformedDiagram,
    NotAMinimumPosition,
    NotAPartition,
    NotAPattern,
    NotIncreasing,
    SearchSpaceTooLarge,
    UsageError,
    ZeroProdError,
)
from .kostant import (
    DimensionVector,
    Interval,
    KostantPartition,
    RankPattern,
    enumerate_partitions,
    ext_dim_indecomposable,
    interval_index,
    intervals,
    lies_in_sigma,
    orbit_codimension,
    partition_from_rank,
    rank_pattern,
)
from .lace import (
    LaceDiagram,
    diagram_from_rising,
    diagram_increasing_case,
    open_orbit_diagram,
    partition_of_diagram,
    render,
)
from .qip import (
    QipSolutionSet,
    RisingVector,
    compositions,
    objective_rising,
    objective_sorted,
    solve_rising,
    solve_sorted,
    sorting_permutation,
    transport_solutions,
)
from .qseries import (
    TruncatedSeries,
    component_series,
    geometric_inverse,
    inverse_pochhammer,
    leading_term,
)
from .represent import (
    IntMatrix,
    exact_rank,
    partial_products_ranks,
    product_is_zero,
    representative_tuple,
)
from .verify import (
    BruteForceResult,
    ComponentRecord,
    ComponentReport,
    CrossCheckReport,
    Equation,
    MethodResult,
    brute_force_components,
    components,
    cross_check,
    reduced_equations,
)

__version__ = "0.1.0"

__all__ = [
    "BruteForceResult",
    "ClosedFormResult",
    "ComponentRecord",
    "ComponentReport",
    "CrossCheckReport",
    "DimensionVector",
    "Equation",
    "InfeasibleVector",
    "IntMatrix",
    "IntegralityViolation",
    "Interval",
    "KostantPartition",
    "LaceDiagram",
    "MalformedDiagram",
    "MethodResult",
    "NotAMinimumPosition",
    "NotAPartition",
    "NotAPattern",
    "NotIncreasing",
    "QipSolutionSet",
    "RankPattern",
    "RisingVector",
    "SearchSpaceTooLarge",
    "TruncatedSeries",
    "UsageError",
    "ZeroProdError",
    "brute_force_components",
    "closed_form",
    "component_series",
    "components",
    "compositions",
    "cross_check",
    "diagram_from_rising",
    "diagram_increasing_case",
    "enumerate_partitions",
    "exact_rank",
    "ext_dim_indecomposable",
    "geometric_inverse",
    "interval_index",
    "intervals",
    "inverse_pochhammer",
    "leading_term",
    "lies_in_sigma",
    "objective_rising",
    "objective_sorted",
    "open_orbit_diagram",
    "orbit_codimension",
    "partial_products_ranks",
    "partition_from_rank",
    "partition_of_diagram",
    "product_is_zero",
    "rank_pattern",
    "reduced_equations",
    "render",
    "representative_tuple",
    "solve_rising",
    "solve_sorted",
    "sorting_permutation",
    "threshold_index",
    "transport_solutions",
]
