"""toricrank: exact invariants of toric ideals of finite simple graphs.

Builds the combinatorial data of the edge-ring kernel of a connected
graph (circuits, degree fibers, minimal binomial generators, the
minimal-support simplicial complex and its matching invariants) and
assembles the certified bracket for the arithmetical rank.  All
arithmetic is exact; the hot kernels run compiled when the extension is
built and fall back to pure Python otherwise.
"""

from ._backend import BACKEND_NAME as KERNEL_BACKEND
from .errors import (
    BoundTooSmallError,
    CapExceededError,
    GraphError,
    GraphFormatError,
    InternalCheckError,
    SearchGuardError,
    ToricrankError,
)
from .graphs import (
    EdgeCycle,
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    cycle_has_chord,
    enumerate_even_cycles,
    enumerate_k4_subgraphs,
    induced_subgraph,
    is_bipartite,
    parse_graph,
)
from .ideals import (
    Binomial,
    Fiber,
    GeneratingSet,
    binomial_from_walk,
    default_degree_bound,
    enumerate_fiber,
    fiber_graph,
    format_monomial,
    g_degree,
    indispensable_binomials,
    indispensable_monomials,
    is_quadratically_generated,
    minimal_generating_set,
    polynomial_in_ideal,
    sample_multiple_divisibility,
)
from .invariants import (
    InvariantReport,
    extremality_check,
    height,
    kn_expected,
    report,
)
from .linalg import (
    CircuitVector,
    circuits_bruteforce,
    integer_rank,
    relint_intersection_feasible,
    vector_in_cone,
)
from .simplicial import (
    ComponentKind,
    DeltaComplex,
    JMatching,
    build_delta,
    classify_component,
    compute_c_min,
    delta_components,
    delta_value,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    "ToricrankError",
    "GraphError",
    "GraphFormatError",
    "CapExceededError",
    "BoundTooSmallError",
    "SearchGuardError",
    "InternalCheckError",
    "Graph",
    "EdgeCycle",
    "parse_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "cycle_graph",
    "is_bipartite",
    "enumerate_even_cycles",
    "cycle_has_chord",
    "enumerate_k4_subgraphs",
    "induced_subgraph",
    "CircuitVector",
    "integer_rank",
    "circuits_bruteforce",
    "vector_in_cone",
    "relint_intersection_feasible",
    "Binomial",
    "Fiber",
    "GeneratingSet",
    "g_degree",
    "binomial_from_walk",
    "polynomial_in_ideal",
    "enumerate_fiber",
    "fiber_graph",
    "indispensable_monomials",
    "indispensable_binomials",
    "minimal_generating_set",
    "is_quadratically_generated",
    "default_degree_bound",
    "sample_multiple_divisibility",
    "format_monomial",
    "DeltaComplex",
    "JMatching",
    "ComponentKind",
    "compute_c_min",
    "build_delta",
    "delta_components",
    "classify_component",
    "delta_value",
    "height",
    "extremality_check",
    "kn_expected",
    "report",
    "InvariantReport",
]
