"""Two-phase tableau simplex over Fraction with Bland's anti-cycling rule.

Instances here are tiny (a handful of rows), so the tableau is kept dense and
reduced costs are recomputed from scratch on every step.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from fractions import Fraction

logger = logging.getLogger(__name__)

LE, GE, EQ = "<=", ">=", "=="


class LPStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class Constraint:
    coeffs: list[Fraction]
    sense: str
    rhs: Fraction


@dataclass
class LinearProgram:
    """Minimise ``objective . x`` subject to ``constraints``.

    Variables are nonnegative unless their index is listed in ``free``.
    """
    objective: list[Fraction]
    constraints: list[Constraint] = field(default_factory=list)
    free: set[int] = field(default_factory=set)

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def add(self, coeffs, sense: str, rhs) -> None:
        if sense not in (LE, GE, EQ):
            raise ValueError(f"unknown constraint sense {sense!r}")
        if len(coeffs) != self.num_vars:
            raise ValueError("constraint length does not match the objective")
        self.constraints.append(Constraint([Fraction(c) for c in coeffs], sense, Fraction(rhs)))


@dataclass
class LPResult:
    status: LPStatus
    x: list[Fraction] = field(default_factory=list)
    value: Fraction | None = None

    @property
    def optimal(self) -> bool:
        return self.status == LPStatus.OPTIMAL


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, c: int) -> None:
        piv = self.rows[r][c]
        self.rows[r] = [v / piv for v in self.rows[r]]
        self.rhs[r] /= piv
        for i in range(len(self.rows)):
            if i == r:
                continue
            factor = self.rows[i][c]
            if factor:
                self.rows[i] = [a - factor * b for a, b in zip(self.rows[i], self.rows[r])]
                self.rhs[i] -= factor * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, cost: list[Fraction]) -> list[Fraction]:
        width = len(cost)
        out = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j in range(width):
                    out[j] -= cb * row[j]
        return out

    def objective(self, cost: list[Fraction]) -> Fraction:
        return sum((cost[b] * self.rhs[i] for i, b in enumerate(self.basis)), Fraction(0))

    def run(self, cost: list[Fraction], allowed: int) -> LPStatus:
        """Bland's rule on columns < ``allowed``."""
        steps = 0
        while True:
            reduced = self.reduced_costs(cost)
            entering = next((j for j in range(allowed) if reduced[j] < 0), None)
            if entering is None:
                return LPStatus.OPTIMAL
            best_row, best_ratio = None, None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = self.rhs[i] / row[entering]
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[i] < self.basis[best_row])
                    ):
                        best_row, best_ratio = i, ratio
            if best_row is None:
                return LPStatus.UNBOUNDED
            self.pivot(best_row, entering)
            steps += 1
            if steps % 500 == 0:
                logger.debug("simplex: %d pivots so far", steps)


def solve_lp(lp: LinearProgram) -> LPResult:
    """Solve ``lp`` exactly.  Free variables are split into positive and negative parts."""
    columns: list[tuple[int, int]] = []  # (original index, sign)
    for j in range(lp.num_vars):
        columns.append((j, 1))
        if j in lp.free:
            columns.append((j, -1))
    n_struct = len(columns)

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    senses: list[str] = []
    for con in lp.constraints:
        coeffs = [con.coeffs[j] * s for j, s in columns]
        b, sense = con.rhs, con.sense
        if b < 0:
            coeffs = [-c for c in coeffs]
            b = -b
            sense = {LE: GE, GE: LE, EQ: EQ}[sense]
        rows.append(coeffs)
        rhs.append(b)
        senses.append(sense)

    n_slack = sum(1 for s in senses if s != EQ)
    n_art = sum(1 for s in senses if s != LE)
    width = n_struct + n_slack + n_art
    basis: list[int] = []
    slack_col, art_col = n_struct, n_struct + n_slack
    full_rows = []
    for coeffs, sense in zip(rows, senses):
        row = coeffs + [Fraction(0)] * (n_slack + n_art)
        if sense == LE:
            row[slack_col] = Fraction(1)
            basis.append(slack_col)
            slack_col += 1
        else:
            if sense == GE:
                row[slack_col] = Fraction(-1)
                slack_col += 1
            row[art_col] = Fraction(1)
            basis.append(art_col)
            art_col += 1
        full_rows.append(row)

    tab = _Tableau(full_rows, rhs, basis)
    first_art = n_struct + n_slack

    if n_art:
        phase1 = [Fraction(0)] * first_art + [Fraction(1)] * n_art
        tab.run(phase1, width)
        if tab.objective(phase1) > 0:
            return LPResult(LPStatus.INFEASIBLE)
        # drive artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] >= first_art:
                col = next((j for j in range(first_art) if tab.rows[i][j] != 0), None)
                if col is None:
                    del tab.rows[i], tab.rhs[i], tab.basis[i]
                    continue
                tab.pivot(i, col)
            i += 1

    cost = [lp.objective[j] * s for j, s in columns] + [Fraction(0)] * (n_slack + n_art)
    status = tab.run(cost, first_art)
    if status != LPStatus.OPTIMAL:
        return LPResult(status)

    values = [Fraction(0)] * width
    for i, b in enumerate(tab.basis):
        values[b] = tab.rhs[i]
    x = [Fraction(0)] * lp.num_vars
    for k, (j, s) in enumerate(columns):
        x[j] += s * values[k]
    value = sum((c * v for c, v in zip(lp.objective, x)), Fraction(0))
    return LPResult(LPStatus.OPTIMAL, x, value)


def is_feasible(lp: LinearProgram) -> bool:
    probe = LinearProgram([Fraction(0)] * lp.num_vars, list(lp.constraints), set(lp.free))
    return solve_lp(probe).optimal
