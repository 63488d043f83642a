"""Exact chromatic polynomials of graphs and hypergraphs, computed several independent ways."""

from .core import (
    Hypergraph,
    HypergraphError,
    IntPolynomial,
    SizeGuardError,
    complete_graph,
    complete_hypergraph,
    components,
    induced_subgraph,
    partitions_meeting_edge,
    poly_eval,
)
from .chromatic import (
    chromatic_bruteforce,
    chromatic_deletion_contraction,
    chromatic_subset_expansion,
    interpolate_from_counts,
)
from .whitney import (
    BrokenFamily,
    EdgeOrdering,
    berge_cycle_broken_sets,
    broken_cycles,
    delta_cycle_broken_sets,
    enumerate_broken_cyclic,
    forest_counts,
    is_broken_cyclic,
    nbc_counts,
    pruned_expansion,
)
from .recursion import (
    a1_recursive,
    b_direct,
    b_graph_forms,
    b_partition,
    coefficients_recursive,
    sign_bound_audit,
)
from .complete import (
    a1_complete,
    a1_complete_piecewise,
    a1_complete_recursive,
    reciprocal_power_sums,
    series_check,
    taylor_roots,
    zemyan_identity_residual,
)

__version__ = "0.1.0"
