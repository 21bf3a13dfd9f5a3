"""Numbers of the form a + b*sqrt(c) with rational a, b."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from lct_certify.models import Ordering


def _square_free_split(c: int) -> tuple[int, int]:
    """Return (k, c') with c = k^2 * c' and c' square-free."""
    k, rest = 1, c
    p = 2
    while p * p <= rest:
        while rest % (p * p) == 0:
            rest //= p * p
            k *= p
        p += 1
    return k, rest


@dataclass(frozen=True)
class QuadraticSurd:
    a: Fraction
    b: Fraction
    c: int

    def __post_init__(self):
        if self.c < 0:
            raise ValueError("radicand must be nonnegative")
        a, b, c = Fraction(self.a), Fraction(self.b), self.c
        if c == 0 or b == 0:
            a, b, c = a, Fraction(0), 0
        else:
            k, c = _square_free_split(c)
            b *= k
            if c == 1:
                a, b, c = a + b, Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def is_rational(self) -> bool:
        return self.c == 0

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.c})"


def compare_surd(s: QuadraticSurd, r: Fraction | int) -> Ordering:
    """Exact ordering of ``s`` against the rational ``r``."""
    d = Fraction(r) - s.a
    if s.is_rational:
        return Ordering.of(Fraction(0), d)
    # compare b*sqrt(c) with d
    if s.b > 0:
        if d <= 0:
            return Ordering.GREATER
        return Ordering.of(s.b * s.b * s.c, d * d)
    if d >= 0:
        return Ordering.LESS
    return Ordering.of(d * d, s.b * s.b * s.c)
