"""Exact counting and verification engine for small cubic graphs.

Perfect matchings, 2-factors and cycles are counted exactly; the extremal
family, the homogeneous-vertex coloring formula and the cycle lower bounds
are checked against exhaustive, isomorph-free censuses.
"""

__version__ = "0.1.0"

from .canonical import CanonicalForm, are_isomorphic, canonical_form, canonical_graph
from .counting import (
    coloring_formula_count,
    count_cycles,
    count_cycles_dfs,
    count_perfect_matchings,
    count_two_factors,
    tensor_contraction_count,
)
from .families import FamilySpec, m_graph, mc_graph, named_graph
from .graph import (
    Graph,
    build_graph,
    classify,
    cyclomatic_number,
    double,
    find_bridges,
    find_ladder_bridges,
    induced_without,
)
from .sequences import (
    check_m_inequalities,
    fibonacci,
    m_value,
    mc_cycle_formula,
    psi_lower_bound,
)

__all__ = [
    "CanonicalForm",
    "FamilySpec",
    "Graph",
    "are_isomorphic",
    "build_graph",
    "canonical_form",
    "canonical_graph",
    "check_m_inequalities",
    "classify",
    "coloring_formula_count",
    "count_cycles",
    "count_cycles_dfs",
    "count_perfect_matchings",
    "count_two_factors",
    "cyclomatic_number",
    "double",
    "fibonacci",
    "find_bridges",
    "find_ladder_bridges",
    "induced_without",
    "m_graph",
    "m_value",
    "mc_cycle_formula",
    "mc_graph",
    "named_graph",
    "psi_lower_bound",
    "tensor_contraction_count",
]
