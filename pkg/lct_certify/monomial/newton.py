"""Newton polytope queries for monomial ideals.

For a monomial ideal J with Newton polytope P, lct(J) = 1/mu where mu is the
first time the diagonal (t, ..., t) enters P.  mu comes out of a small primal
LP; the dual LP yields a supporting hyperplane a.x = 1 of P at (mu, ..., mu).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from lct_certify.errors import DegenerateNormalError
from lct_certify.lp import GE, LE, EQ, LinearProgram, solve_lp
from lct_certify.monomial.ideal import MonomialIdeal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NewtonPolytopeQuery:
    mu: Fraction
    supporting_normal: tuple[Fraction, ...]

    def certifies(self, ideal: MonomialIdeal) -> bool:
        """a.g >= 1 for every generator and a.(mu, ..., mu) == 1."""
        a = self.supporting_normal
        if self.mu <= 0 or any(x < 0 for x in a):
            return False
        if sum(a) * self.mu != 1:
            return False
        return all(sum(x * y for x, y in zip(a, g)) >= 1 for g in ideal.generators)


def diagonal_entry_time(ideal: MonomialIdeal) -> Fraction:
    """min t such that a convex combination of generators is <= (t, ..., t)."""
    k, n = len(ideal.generators), ideal.dimension
    # variables: w_1..w_k, t
    lp = LinearProgram([Fraction(0)] * k + [Fraction(1)])
    for i in range(n):
        lp.add([g[i] for g in ideal.generators] + [-1], LE, 0)
    lp.add([1] * k + [0], EQ, 1)
    result = solve_lp(lp)
    if not result.optimal:
        raise RuntimeError(f"diagonal LP returned {result.status.value}")
    return result.x[-1]


def lct_monomial(ideal: MonomialIdeal) -> Fraction:
    return 1 / diagonal_entry_time(ideal)


def _dual_program(ideal: MonomialIdeal, floor_: Fraction = Fraction(0)) -> tuple[Fraction, list[Fraction]]:
    """max z s.t. y.g >= z for all g, sum(y) <= 1, y_i >= floor_."""
    n = ideal.dimension
    lp = LinearProgram([Fraction(0)] * n + [Fraction(-1)])
    for g in ideal.generators:
        lp.add(list(g) + [-1], GE, 0)
    lp.add([1] * n + [0], LE, 1)
    if floor_:
        for i in range(n):
            row = [0] * (n + 1)
            row[i] = 1
            lp.add(row, GE, floor_)
    result = solve_lp(lp)
    if not result.optimal:
        raise RuntimeError(f"dual LP returned {result.status.value}")
    return result.x[-1], result.x[:n]


def supporting_normal(ideal: MonomialIdeal) -> NewtonPolytopeQuery:
    mu = diagonal_entry_time(ideal)
    z, y = _dual_program(ideal)
    if z != mu:
        raise RuntimeError(f"strong duality violated: primal {mu}, dual {z}")
    a = tuple(v / z for v in y)
    if any(x == 0 for x in a):
        raise DegenerateNormalError(mu, a)
    query = NewtonPolytopeQuery(mu, a)
    if not query.certifies(ideal):
        raise RuntimeError(f"normal {a} does not certify mu = {mu}")
    return query


def perturbed_normal(ideal: MonomialIdeal, slack: Fraction) -> NewtonPolytopeQuery:
    """A strictly positive normal with a.g >= 1 and 1 <= a.(mu..mu) <= 1 + slack.

    The returned query carries the true mu; ``certifies`` holds only when the
    perturbation happened to be unnecessary.
    """
    slack = Fraction(slack)
    if slack <= 0:
        raise ValueError("slack must be positive")
    n = ideal.dimension
    mu = diagonal_entry_time(ideal)
    # (1 - n*floor)*mu <= z keeps mu/z within 1 + slack
    floor_ = slack / ((1 + slack) * n)
    z, y = _dual_program(ideal, floor_)
    a = tuple(v / z for v in y)
    logger.debug("perturbed normal %s with floor %s, overshoot %s", a, floor_, mu / z)
    return NewtonPolytopeQuery(mu, a)


def nonlc_check(ideal: MonomialIdeal, lam: Fraction) -> bool:
    """Is (A^n; J^(1/lam)) not log canonical at the origin?"""
    return diagonal_entry_time(ideal) > lam


def nonklt_check(ideal: MonomialIdeal, lam: Fraction) -> bool:
    return diagonal_entry_time(ideal) >= lam
