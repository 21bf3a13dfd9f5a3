"""Certified rational enclosures of e and e^2.

The Taylor partial sum S_N of e satisfies S_N < e < S_N + 2/(N+1)!, so every
interval returned here contains the true value and shrinks as ``digits``
grows; consecutive intervals are nested.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from lct_certify.models import Ordering, Verdict

MAX_DIGITS = 50


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval with lo > hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi

    def scale(self, factor: Fraction | int) -> RationalInterval:
        factor = Fraction(factor)
        if factor < 0:
            raise ValueError("only nonnegative scaling keeps the orientation")
        return RationalInterval(self.lo * factor, self.hi * factor)

    def compare(self, value: Fraction | int) -> Ordering | None:
        """Order the enclosed quantity against ``value``; None if undecided."""
        if self.hi < value:
            return Ordering.LESS
        if self.lo > value:
            return Ordering.GREATER
        if self.lo == self.hi == value:
            return Ordering.EQUAL
        return None


def decide_at_least(value: Fraction | int, interval: RationalInterval) -> Verdict:
    """Is ``value`` >= the quantity enclosed by ``interval``?"""
    if value >= interval.hi:
        return Verdict.TRUE
    if value < interval.lo:
        return Verdict.FALSE
    return Verdict.INCONCLUSIVE


def _terms_needed(digits: int) -> int:
    # remainder 2/(N+1)! blown up by at most 6 when squaring, with two spare digits
    target = Fraction(1, 10 ** (digits + 2))
    n, fact = 0, 1
    while Fraction(12, fact * (n + 1)) >= target:
        n += 1
        fact *= n
    return n


def e_enclosure(power: int, digits: int) -> RationalInterval:
    if power not in (1, 2):
        raise ValueError("power must be 1 or 2")
    if not 0 <= digits <= MAX_DIGITS:
        raise ValueError(f"digits must lie in [0, {MAX_DIGITS}]")
    n_terms = _terms_needed(digits)
    partial, term = Fraction(0), Fraction(1)
    for k in range(n_terms + 1):
        if k:
            term /= k
        partial += term
    remainder = 2 * term / (n_terms + 1)
    lo, hi = partial, partial + remainder
    if power == 2:
        lo, hi = lo * lo, hi * hi
    return RationalInterval(lo, hi)
