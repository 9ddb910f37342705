"""Finite Jaco graph workbench."""

from ._core import (
    JacoGraph,
    SimpleGraph,
    all_gamma_sets,
    alpha_oracle,
    analyze_gamma_set,
    bondage,
    check_names,
    chi_oracle,
    chromatic_closed_form,
    compact_gamma_sets,
    covering_number,
    gamma,
    gamma_minus,
    gamma_oracle,
    gamma_recursion,
    independence_trace,
    murtage,
    murtage_oracle,
    run_check,
    spanning_tree_preserving,
)

__all__ = [
    "JacoGraph",
    "SimpleGraph",
    "all_gamma_sets",
    "alpha_oracle",
    "analyze_gamma_set",
    "bondage",
    "check_names",
    "chi_oracle",
    "chromatic_closed_form",
    "compact_gamma_sets",
    "covering_number",
    "gamma",
    "gamma_minus",
    "gamma_oracle",
    "gamma_recursion",
    "independence_trace",
    "murtage",
    "murtage_oracle",
    "run_check",
    "spanning_tree_preserving",
]
