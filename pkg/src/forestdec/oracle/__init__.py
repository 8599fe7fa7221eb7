"""Exact oracle for bounded two-part decompositions."""

from ._kernel import JIT_ENABLED
from .core import (
    UNLIMITED,
    BudgetExceeded,
    OracleResult,
    Outcome,
    SearchBudget,
    bfs_arc_order,
    oracle_decide,
    oracle_enumerate,
)

__all__ = [
    "JIT_ENABLED",
    "UNLIMITED",
    "BudgetExceeded",
    "OracleResult",
    "Outcome",
    "SearchBudget",
    "bfs_arc_order",
    "oracle_decide",
    "oracle_enumerate",
]
