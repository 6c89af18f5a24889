"""Exact coloring-count engine and verification harness for theta graphs.

Counts proper colorings three ways -- plain colorings, list colorings, and
independent transversals of edge-matching covers -- with exact unbounded
integers throughout, and checks the closed forms and inequalities that
relate them on desk-scale instances.
"""

__version__ = "0.1.0"

from .errors import BudgetExceededError
from .graphs import (
    Graph,
    ThetaSpec,
    build_family,
    build_theta,
    classify_core,
    complete_bipartite,
    complete_graph,
    core_of,
    cycle_graph,
    is_isomorphic,
    path_graph,
    recognize_theta,
)
from .polynomials import IntPolynomial, eval_poly
from .chromatic import (
    chromatic_number,
    chromatic_polynomial,
    count_colorings_bruteforce,
    theta_chromatic_closed_form,
)
from .listcolor import (
    CountMatrix,
    ListAssignment,
    achievable_matrices,
    assemble_theta_count,
    canonical_form,
    count_list_colorings,
    count_theta_assignment,
    list_color_function_cycle,
    list_color_function_generic,
    list_color_function_theta,
    path_count_matrix,
    same_list_assignment,
)
from .covers import (
    Cover,
    count_cover_colorings,
    cover_from_list_assignment,
    dp_color_function_exact,
    dp_parity_arrangement,
    path_cover_count,
    theta_dp_closed_form,
)

__all__ = [
    "BudgetExceededError",
    "Graph",
    "ThetaSpec",
    "build_family",
    "build_theta",
    "classify_core",
    "complete_bipartite",
    "complete_graph",
    "core_of",
    "cycle_graph",
    "is_isomorphic",
    "path_graph",
    "recognize_theta",
    "IntPolynomial",
    "eval_poly",
    "chromatic_number",
    "chromatic_polynomial",
    "count_colorings_bruteforce",
    "theta_chromatic_closed_form",
    "CountMatrix",
    "ListAssignment",
    "achievable_matrices",
    "assemble_theta_count",
    "canonical_form",
    "count_list_colorings",
    "count_theta_assignment",
    "list_color_function_cycle",
    "list_color_function_generic",
    "list_color_function_theta",
    "path_count_matrix",
    "same_list_assignment",
    "Cover",
    "count_cover_colorings",
    "cover_from_list_assignment",
    "dp_color_function_exact",
    "dp_parity_arrangement",
    "path_cover_count",
    "theta_dp_closed_form",
]
