"""Equitable tree colorings for graphs whose max degree is at least half the order.

Public surface re-exported here; the compiled kernel backend is selected at
import time (``eqarbor.kernel_backend()`` reports which one is active).
"""

from ._kernel import BACKEND as _KERNEL_BACKEND
from .construct import (
    BlockAllocation,
    Regime,
    RegimePlan,
    TreeColoring,
    classify_regime,
    color_complete_like,
    color_high_window,
    color_low_window,
    color_mid_window,
    equitable_tree_coloring,
    gamma,
    gamma_of_max_degree,
    plan_for,
    read_coloring,
    write_coloring,
)
from .errors import (
    AllocationFailed,
    ArborError,
    CapExceeded,
    ConstructionFailed,
    DegreeTooLow,
    FormatError,
    InsufficientMatching,
    NotConnected,
    OutOfScope,
    TargetUnreachable,
)
from .graph import (
    DegreeStats,
    Graph,
    complement,
    components,
    degree_stats,
    from_edge_list,
    from_rows,
    induces_forest,
    induces_linear_forest,
    is_connected,
    mask_of,
    read_graph,
    vertices_of,
    write_graph,
)
from .matching import Matching, matching_of_size, maximum_matching
from .oracle import (
    DEFAULT_CAP,
    FailureKind,
    SweepReport,
    VerifyReport,
    exact_a_eq,
    exists_equitable_k_tree_coloring,
    find_equitable_coloring,
    gen_random,
    graph_from_mask,
    mask_of_graph,
    sweep_conjecture,
    verify,
)
from .paths import CycleWitness, PathWitness, inextensible_path, long_cycle, long_path

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Name of the active kernel backend: 'c' (compiled) or 'py' (pure)."""
    return _KERNEL_BACKEND


__all__ = [
    "AllocationFailed",
    "ArborError",
    "BlockAllocation",
    "CapExceeded",
    "ConstructionFailed",
    "CycleWitness",
    "DEFAULT_CAP",
    "DegreeStats",
    "DegreeTooLow",
    "FailureKind",
    "FormatError",
    "Graph",
    "InsufficientMatching",
    "Matching",
    "NotConnected",
    "OutOfScope",
    "PathWitness",
    "Regime",
    "RegimePlan",
    "SweepReport",
    "TargetUnreachable",
    "TreeColoring",
    "VerifyReport",
    "classify_regime",
    "color_complete_like",
    "color_high_window",
    "color_low_window",
    "color_mid_window",
    "complement",
    "components",
    "degree_stats",
    "equitable_tree_coloring",
    "exact_a_eq",
    "exists_equitable_k_tree_coloring",
    "find_equitable_coloring",
    "from_edge_list",
    "from_rows",
    "gamma",
    "gamma_of_max_degree",
    "gen_random",
    "graph_from_mask",
    "induces_forest",
    "induces_linear_forest",
    "inextensible_path",
    "is_connected",
    "kernel_backend",
    "long_cycle",
    "long_path",
    "mask_of",
    "mask_of_graph",
    "matching_of_size",
    "maximum_matching",
    "plan_for",
    "read_coloring",
    "read_graph",
    "sweep_conjecture",
    "verify",
    "vertices_of",
    "write_coloring",
    "write_graph",
]
