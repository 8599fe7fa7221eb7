"""Polynomial-time solvers and the path/cycle routines they are built on."""

from .bdlfd import solve_bdlfd_11, solve_bdlfd_21
from .bogd import build_matching_model, conflict_graph, solve_bogd_inf_inf, solve_bogd_k1
from .dispatch import is_polynomial, solve
from .paths import (
    ALL_SUBSETS,
    EndarcConstraint,
    OrientedCycle,
    OrientedPath,
    XGadget,
    XSet,
    build_xgadget,
    compute_xset,
    cycle_21,
    cycle_k1_galaxy,
    path_21_constrained,
    path_21_free,
    path_21_isolated_endarcs,
    path_k1_galaxy_constrained,
    xset,
)

__all__ = [
    "ALL_SUBSETS",
    "EndarcConstraint",
    "OrientedCycle",
    "OrientedPath",
    "XGadget",
    "XSet",
    "build_matching_model",
    "build_xgadget",
    "compute_xset",
    "conflict_graph",
    "cycle_21",
    "cycle_k1_galaxy",
    "is_polynomial",
    "path_21_constrained",
    "path_21_free",
    "path_21_isolated_endarcs",
    "path_k1_galaxy_constrained",
    "solve",
    "solve_bdlfd_11",
    "solve_bdlfd_21",
    "solve_bogd_inf_inf",
    "solve_bogd_k1",
    "xset",
]
