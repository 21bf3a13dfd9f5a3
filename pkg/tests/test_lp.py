"""Tests for the exact simplex solver."""

from fractions import Fraction

import pytest

from lct_certify.lp import EQ, GE, LE, LinearProgram, LPStatus, is_feasible, solve_lp


def _make_lp(objective, rows, free=()):
    lp = LinearProgram([Fraction(c) for c in objective], free=set(free))
    for coeffs, sense, rhs in rows:
        lp.add(coeffs, sense, rhs)
    return lp


class TestSolveLp:
    def test_small_maximisation(self):
        lp = _make_lp([-1, -1], [([1, 2], LE, 4), ([3, 1], LE, 6)])
        result = solve_lp(lp)
        assert result.optimal
        assert result.x == [Fraction(8, 5), Fraction(6, 5)]
        assert result.value == Fraction(-14, 5)

    def test_equality_and_ge(self):
        lp = _make_lp([1, 2], [([1, 1], EQ, 3), ([1, 0], GE, 1)])
        result = solve_lp(lp)
        assert result.optimal
        assert result.x == [3, 0]
        assert result.value == 3

    def test_negative_rhs_is_normalised(self):
        lp = _make_lp([1], [([-1], LE, -2)])
        result = solve_lp(lp)
        assert result.x == [2]

    def test_infeasible(self):
        lp = _make_lp([0], [([1], GE, 2), ([1], LE, 1)])
        assert solve_lp(lp).status == LPStatus.INFEASIBLE
        assert not is_feasible(lp)

    def test_unbounded(self):
        lp = _make_lp([-1, 0], [([0, 1], LE, 1)])
        assert solve_lp(lp).status == LPStatus.UNBOUNDED

    def test_free_variable(self):
        lp = _make_lp([1], [([1], GE, -3)], free=[0])
        result = solve_lp(lp)
        assert result.value == -3

    def test_redundant_equalities(self):
        lp = _make_lp([1, 1], [([1, 1], EQ, 2), ([2, 2], EQ, 4), ([1, 0], LE, 1)])
        result = solve_lp(lp)
        assert result.optimal
        assert result.value == 2

    def test_degenerate_cycling_example(self):
        # a classic instance on which the textbook pivot rule cycles
        lp = _make_lp(
            [0, 0, 0, Fraction(-3, 4), 150, Fraction(-1, 50), 6],
            [
                ([1, 0, 0, Fraction(1, 4), -60, Fraction(-1, 25), 9], EQ, 0),
                ([0, 1, 0, Fraction(1, 2), -90, Fraction(-1, 50), 3], EQ, 0),
                ([0, 0, 1, 0, 0, 1, 0], EQ, 1),
            ],
        )
        result = solve_lp(lp)
        assert result.optimal
        assert result.value == Fraction(-1, 20)


class TestLinearProgram:
    def test_rejects_unknown_sense(self):
        lp = LinearProgram([Fraction(1)])
        with pytest.raises(ValueError):
            lp.add([1], "<", 1)

    def test_rejects_wrong_length(self):
        lp = LinearProgram([Fraction(1), Fraction(1)])
        with pytest.raises(ValueError):
            lp.add([1], LE, 1)
