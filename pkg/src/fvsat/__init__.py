"""Feedback vertex sets, monotone NAE satisfiability, reducible flow
graphs, and consecutive-ones orders.

The package connects four views of one optimization landscape: minimum
(acyclic) feedback vertex sets in digraphs, minimum-ones (NAE)
satisfiability of exactly-3 CNFs, LR-orders as certificates tying the
two together, and the reducible-flow-graph and consecutive-ones classes
where those certificates come cheap.
"""

from .c1p import (BinaryMatrix, IntervalPointFamily, LoopError, MatrixError,
                  NotC1P, adjacency_matrix, c1p_good_order, format_matrix,
                  gen_interval_point_family, interval_point_digraph,
                  lr_order_from_c1p, read_matrix)
from .digraph import (ArcClass, CyclicError, DfsTree, Digraph, EdgeListError,
                      LimitExceeded, NotFlowGraphError, dfs_tree, dominates,
                      enumerate_cycles, format_edge_list, is_acyclic,
                      read_edge_list, to_dot, topological_order)
from .flowgraph import (BlockGraph, FlowAnalysis, NotReducibleError,
                        block_graph, collapse, gen_reducible, heads_and_psets,
                        lr_ordering, reducibility, reduction_order,
                        sn_numbering)
from .fvs import (GammaCyclicError, LROrder, NoAcyclicFvs,
                  NotAcyclicFvsError, OptResult, ProperSubsetError, Side,
                  SizeGuardError, brute_amfvs, brute_mfvs, brute_min_ones,
                  is_acyclic_fvs, is_fvs, lr_order_from_acyclic_fvs,
                  lr_order_from_nae, verify_lr_order)
from .reduction import (ClauseRole, DegenerateError, LiftFailed,
                        TwoChoiceInstance, VariableGroup, VarMap,
                        format_mapping, lift_assignment, normalize_clauses,
                        parse_mapping, project_assignment, to_mnae,
                        two_choice_instance)
from .sat import (Assignment, Clause3, DimacsError, Formula, Literal, Mode,
                  NotMonotoneError, RepeatedVariableError, clause, evaluate,
                  format_dimacs, gen_3sat, is_3c_digraph, is_monotone,
                  is_strongly_3_covered_form, parse_dimacs,
                  representative_graph)

__version__ = "0.1.0"

__all__ = [
    "ArcClass", "Assignment", "BinaryMatrix", "BlockGraph", "Clause3",
    "ClauseRole", "CyclicError", "DegenerateError", "DfsTree", "Digraph",
    "DimacsError", "EdgeListError", "FlowAnalysis", "Formula",
    "GammaCyclicError", "IntervalPointFamily", "LROrder", "LiftFailed",
    "LimitExceeded", "Literal", "LoopError", "MatrixError", "Mode",
    "NoAcyclicFvs", "NotAcyclicFvsError", "NotC1P", "NotFlowGraphError",
    "NotMonotoneError", "NotReducibleError", "OptResult",
    "ProperSubsetError", "RepeatedVariableError", "Side", "SizeGuardError",
    "TwoChoiceInstance", "VarMap", "VariableGroup", "adjacency_matrix",
    "block_graph", "brute_amfvs", "brute_mfvs", "brute_min_ones",
    "c1p_good_order", "clause", "collapse", "dfs_tree", "dominates",
    "enumerate_cycles", "evaluate", "format_dimacs", "format_edge_list",
    "format_mapping", "format_matrix", "gen_3sat",
    "gen_interval_point_family", "gen_reducible", "heads_and_psets",
    "interval_point_digraph", "is_3c_digraph", "is_acyclic",
    "is_acyclic_fvs", "is_fvs", "is_monotone", "is_strongly_3_covered_form",
    "lift_assignment", "lr_order_from_acyclic_fvs", "lr_order_from_c1p",
    "lr_order_from_nae", "lr_ordering", "normalize_clauses", "parse_dimacs",
    "parse_mapping", "project_assignment", "read_edge_list", "read_matrix",
    "reducibility", "reduction_order", "representative_graph",
    "sn_numbering", "to_dot", "to_mnae", "topological_order",
    "two_choice_instance", "verify_lr_order",
]
