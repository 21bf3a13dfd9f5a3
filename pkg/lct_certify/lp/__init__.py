"""Exact rational linear programming."""

from __future__ import annotations

from lct_certify.lp.simplex import (
    EQ,
    GE,
    LE,
    Constraint,
    LinearProgram,
    LPResult,
    LPStatus,
    is_feasible,
    solve_lp,
)

__all__ = [
    "EQ",
    "GE",
    "LE",
    "Constraint",
    "LinearProgram",
    "LPResult",
    "LPStatus",
    "is_feasible",
    "solve_lp",
]
