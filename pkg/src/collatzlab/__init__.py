"""Collatz transition-system models, action calculus and lemma verification.

Four related nondeterministic models over the positive integers (plus one
exact-rational interpreter), a four-action algebra with exact inverses, a
ternary-digit view of values, a catalog of machine-checkable rewriting
claims, bounded reachability search, and graph experiments (cycle census,
guard-edge removal).
"""

from .actions import (Action, ActionSeq, ModelId, Trace, action_function,
                      apply, apply_seq, evaluate_exact, inverse_seq, is_legal,
                      parse_seq, validate_trace)
from .catalog import Claim, build_claims
from .errors import (BudgetExceeded, CollatzlabError, DepthExceeded,
                     DomainViolation, GuardViolation, IllegalEdge, ParseError,
                     UnknownClaim)
from .experiments import DeloopReport, cycle_census, delooping_experiment
from .models import (BoundedGraph, EdgeClass, bounded_graph, classify_edge,
                     drop_edge_classes, predecessors, successors, to_dot)
from .search import (Path, SearchBounds, Unreachable, all_reach_one,
                     bfs_reach, bfs_reach_bidirectional, bfs_until,
                     default_bounds, stats_csv, stopping_stats, trajectory)
from .ternary import Ternary, from_ternary, parse_ternary, to_ternary
from .verify import (Failure, VerifyReport, all_claim_ids, run_any_claim,
                     verify_claim, verify_cluster, verify_descending,
                     verify_edge_loop, verify_succession)

__version__ = "0.1.0"

__all__ = [
    "Action", "ActionSeq", "ModelId", "Trace", "action_function", "apply",
    "apply_seq", "evaluate_exact", "inverse_seq", "is_legal", "parse_seq",
    "validate_trace",
    "Claim", "build_claims",
    "BudgetExceeded", "CollatzlabError", "DepthExceeded", "DomainViolation",
    "GuardViolation", "IllegalEdge", "ParseError", "UnknownClaim",
    "DeloopReport", "cycle_census", "delooping_experiment",
    "BoundedGraph", "EdgeClass", "bounded_graph", "classify_edge",
    "drop_edge_classes", "predecessors", "successors", "to_dot",
    "Path", "SearchBounds", "Unreachable", "all_reach_one", "bfs_reach",
    "bfs_reach_bidirectional", "bfs_until", "default_bounds", "stats_csv",
    "stopping_stats", "trajectory",
    "Ternary", "from_ternary", "parse_ternary", "to_ternary",
    "Failure", "VerifyReport", "all_claim_ids", "run_any_claim",
    "verify_claim", "verify_cluster", "verify_descending", "verify_edge_loop",
    "verify_succession",
    "__version__",
]
