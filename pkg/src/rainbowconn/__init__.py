"""Rainbow connection parameters of graphs: bounds, exact search, certificates.

The six parameters (rc, src, rvc, srvc, trc, strc) are named by :class:`Kind`.
"""
from .bounds import BoundsReport, bounds, lower_bound, upper_bound
from .colouring import (
    ALL_KINDS,
    Colouring,
    Kind,
    KindMismatch,
    NotAPath,
    Violation,
    check_connectivity,
    find_violation,
    path_is_rainbow,
)
from .exact import Budget, Decision, ExactResult, Status, Verdict, compute_all, compute_parameter, decide_k
from .graph_core import (
    Graph,
    GraphStats,
    InvalidEdge,
    InvalidVertex,
    NotConnected,
    Unreachable,
    build_graph,
    enumerate_bounded_paths,
    enumerate_geodesics,
    expand_vertex,
    stats,
)
from .kernel import BACKEND

__version__ = "0.1.0"
