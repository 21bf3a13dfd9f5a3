"""Lattice-point counting in the simplices Q_a.

Counting works on an integer rescaling: with a common denominator L the
condition a.x < 1 becomes alpha.x < L for integers alpha_i = a_i * L.
Coordinates are visited in order of decreasing a_i, so the outermost loops
have the fewest branches.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterator

from lct_certify.errors import UnboundedSimplexError
from lct_certify.lattice.models import Point, SimplexSpec


def integer_form(a) -> tuple[list[int], int]:
    """Integers (alpha, gamma) with a = alpha / gamma."""
    a = [Fraction(x) for x in a]
    den = lcm(*(x.denominator for x in a))
    return [int(x * den) for x in a], den


def _check(a) -> None:
    if any(Fraction(x) <= 0 for x in a):
        raise UnboundedSimplexError(f"covector {tuple(str(x) for x in a)} has a non-positive entry")


def _count(alphas: list[int], budget: int, strict: bool, cap: int | None) -> int:
    # points x >= 0 in len(alphas) coordinates with alphas.x < budget (or <=)
    head = alphas[0]
    if len(alphas) == 1:
        if strict:
            return (budget - 1) // head + 1 if budget > 0 else 0
        return budget // head + 1 if budget >= 0 else 0
    total = 0
    rest = alphas[1:]
    x = 0
    while budget - head * x > 0 or (not strict and budget - head * x == 0):
        total += _count(rest, budget - head * x, strict, None if cap is None else cap - total)
        if cap is not None and total > cap:
            return total
        x += 1
    return total


def count_simplex(spec: SimplexSpec, cap: int | None = None) -> int:
    """#(Q_a ∩ Z^n).  With ``cap`` the count stops early once it exceeds cap."""
    _check(spec.a)
    alphas, gamma = integer_form(spec.a)
    alphas.sort(reverse=True)
    return _count(alphas, gamma, spec.strict, cap)


def lattice_points(spec: SimplexSpec) -> Iterator[Point]:
    """Enumerate Q_a ∩ Z^n in lexicographic order of the original coordinates."""
    _check(spec.a)
    alphas, gamma = integer_form(spec.a)
    n = len(alphas)

    def walk(i: int, used: int, prefix: list[int]):
        if i == n:
            yield tuple(prefix)
            return
        x = 0
        while True:
            rem = gamma - used - alphas[i] * x
            if rem < 0 or (spec.strict and rem == 0):
                return
            yield from walk(i + 1, used + alphas[i] * x, prefix + [x])
            x += 1

    yield from walk(0, 0, [])


def boundary_points(a) -> list[Point]:
    """Lattice points x >= 0 with a.x == 1 exactly, sorted."""
    _check(a)
    alphas, gamma = integer_form(a)
    n = len(alphas)
    out: list[Point] = []

    def walk(i: int, rem: int, prefix: list[int]):
        if i == n - 1:
            if rem % alphas[i] == 0:
                out.append(tuple(prefix + [rem // alphas[i]]))
            return
        for x in range(rem // alphas[i] + 1):
            walk(i + 1, rem - alphas[i] * x, prefix + [x])

    walk(0, gamma, [])
    return sorted(out)


def dot(a, p) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(a, p)), Fraction(0))
