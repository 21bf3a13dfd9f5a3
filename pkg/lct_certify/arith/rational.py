"""Exact rational helpers: the "p/q" wire form, binomials and power comparisons."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import sympy

from lct_certify.models import Ordering


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"``, an integer or a finite decimal into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = str(text).strip()
    if not text:
        raise ValueError("empty rational")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def to_sympy(value: Fraction | int) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    """A sympy Rational (or Integer) back to a Fraction; anything irrational is an error."""
    value = sympy.sympify(value)
    if not isinstance(value, sympy.Rational):
        raise ValueError(f"not rational: {value}")
    return Fraction(int(value.p), int(value.q))


def binomial(n: int, k: int) -> int:
    """C(n, k) by the descending product, reducing by the gcd at each step."""
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    num, den = 1, 1
    for i in range(1, k + 1):
        num *= n - k + i
        den *= i
        g = gcd(num, den)
        num //= g
        den //= g
    return num // den


def power_over_factorial(m: int) -> Fraction:
    """m^m / m!."""
    if m < 1:
        raise ValueError("m must be positive")
    fact = 1
    for i in range(2, m + 1):
        fact *= i
    return Fraction(m**m, fact)


def power_of_two(p: int) -> Fraction:
    return Fraction(2**p) if p >= 0 else Fraction(1, 2**-p)


def compare_pow2_fractional(q: int | Fraction, p: int, m: int) -> Ordering:
    """Order q against 2^(p/m) by comparing q^m with 2^p."""
    if q <= 0:
        raise ValueError("q must be positive")
    if m < 1:
        raise ValueError("m must be positive")
    return Ordering.of(Fraction(q) ** m, power_of_two(p))
