"""Exact graph colouring through neighbourhood diversity and a covering ILP."""
from .graph import Graph, PatternName, contains_induced, parse_dimacs, write_dimacs
from .ilp import (BudgetExceeded, CoveringIlp, IlpSolution, build_coloring_ilp,
                  solve_covering_ilp, to_equality_form)
from .mis import MisFamily, dominates, enumerate_mis, induces
from .nd import (ClassKind, NdDecomposition, TypeGraph, blow_up, build_type_graph,
                 compute_nd_decomposition, is_k_uniform)
from .pipeline import (Coloring, canonical_solution_from_coloring, chromatic_number,
                       color_graph, color_type_graph, reconstruct_coloring, verify_coloring)
from .classcheck import ClassReport, assert_structure_bounds, check_class

__all__ = [
    "Graph", "PatternName", "contains_induced", "parse_dimacs", "write_dimacs",
    "BudgetExceeded", "CoveringIlp", "IlpSolution", "build_coloring_ilp",
    "solve_covering_ilp", "to_equality_form",
    "MisFamily", "dominates", "enumerate_mis", "induces",
    "ClassKind", "NdDecomposition", "TypeGraph", "blow_up", "build_type_graph",
    "compute_nd_decomposition", "is_k_uniform",
    "Coloring", "canonical_solution_from_coloring", "chromatic_number", "color_graph",
    "color_type_graph", "reconstruct_coloring", "verify_coloring",
    "ClassReport", "assert_structure_bounds", "check_class",
]
