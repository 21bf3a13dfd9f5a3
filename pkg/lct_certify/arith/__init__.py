"""Exact integer, rational, surd and enclosure arithmetic."""

from __future__ import annotations

from lct_certify.arith.enclosure import RationalInterval, decide_at_least, e_enclosure
from lct_certify.arith.rational import (
    binomial,
    compare_pow2_fractional,
    format_rational,
    from_sympy,
    parse_rational,
    power_of_two,
    power_over_factorial,
    to_sympy,
)
from lct_certify.arith.surd import QuadraticSurd, compare_surd

__all__ = [
    "QuadraticSurd",
    "RationalInterval",
    "binomial",
    "compare_pow2_fractional",
    "compare_surd",
    "decide_at_least",
    "e_enclosure",
    "format_rational",
    "from_sympy",
    "parse_rational",
    "power_of_two",
    "power_over_factorial",
    "to_sympy",
]
