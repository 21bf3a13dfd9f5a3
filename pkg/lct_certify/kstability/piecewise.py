"""Exact polynomials and piecewise polynomials.

Coefficients are stored as a Fraction tuple; arithmetic, calculus and root
counting go through ``sympy.Poly`` over QQ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from sympy import QQ, Poly, Symbol

from lct_certify.arith import binomial, format_rational, from_sympy, parse_rational, to_sympy

_X = Symbol("x")


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """sum coeffs[k] * x^k; the zero polynomial has no coefficients."""
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((Fraction(c),))

    @classmethod
    def linear(cls, c0, c1) -> Polynomial:
        return cls((Fraction(c0), Fraction(c1)))

    @classmethod
    def from_poly(cls, poly: Poly) -> Polynomial:
        return cls(tuple(from_sympy(c) for c in reversed(poly.all_coeffs())))

    def as_poly(self) -> Poly:
        coeffs = [to_sympy(c) for c in reversed(self.coeffs)] or [0]
        return Poly(coeffs, _X, domain=QQ)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        return Polynomial.from_poly(self.as_poly() + other.as_poly())

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return Polynomial.from_poly(self.as_poly() - other.as_poly())

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial(tuple(c * Fraction(other) for c in self.coeffs))
        return Polynomial.from_poly(self.as_poly() * other.as_poly())

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        return Polynomial.from_poly(self.as_poly() ** k)

    def antiderivative(self) -> Polynomial:
        """The primitive vanishing at 0."""
        return Polynomial.from_poly(self.as_poly().integrate())

    def derivative(self) -> Polynomial:
        return Polynomial.from_poly(self.as_poly().diff(_X))

    def integrate(self, lo, hi) -> Fraction:
        prim = self.as_poly().integrate()
        return from_sympy(prim.eval(to_sympy(hi)) - prim.eval(to_sympy(lo)))

    def is_nonnegative_on(self, lo, hi) -> bool:
        """Exact test of p >= 0 on [lo, hi].

        Only roots of odd multiplicity change the sign, so p keeps one sign
        on (lo, hi) when their square-free product has no root strictly
        inside; that sign is read off at an interior point where p is nonzero.
        """
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        if self.is_zero:
            return True
        _, factors = self.as_poly().sqf_list()
        crossing = Poly(1, _X, domain=QQ)
        for factor, multiplicity in factors:
            if multiplicity % 2:
                crossing = crossing * factor
        if crossing.degree() > 0:
            inside = crossing.count_roots(to_sympy(lo), to_sympy(hi))
            inside -= sum(1 for end in {lo, hi} if crossing.eval(to_sympy(end)) == 0)
            if inside:
                return False
        if lo == hi:
            return self(lo) >= 0
        steps = self.degree + 2
        for j in range(1, steps):
            value = self(lo + (hi - lo) * Fraction(j, steps))
            if value:
                return value > 0
        return True


def affine_power(c0, c1, k: int) -> Polynomial:
    """(c0 + c1*x)^k expanded by the binomial theorem."""
    c0, c1 = Fraction(c0), Fraction(c1)
    return Polynomial(tuple(binomial(k, j) * c0 ** (k - j) * c1**j for j in range(k + 1)))


@dataclass(frozen=True)
class PiecewisePolynomial:
    """Polynomials ``pieces[i]`` on [breakpoints[i], breakpoints[i+1]], continuous."""
    breakpoints: tuple[Fraction, ...]
    pieces: tuple[Polynomial, ...]

    def __post_init__(self):
        bps = tuple(Fraction(b) for b in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        if len(bps) != len(self.pieces) + 1 or not self.pieces:
            raise ValueError("need one more breakpoint than pieces")
        if any(b >= c for b, c in zip(bps, bps[1:])):
            raise ValueError("breakpoints must increase")
        for i in range(1, len(self.pieces)):
            left, right = self.pieces[i - 1](bps[i]), self.pieces[i](bps[i])
            if left != right:
                raise ValueError(f"discontinuous at {bps[i]}: {left} != {right}")

    @classmethod
    def single(cls, lo, hi, poly: Polynomial) -> PiecewisePolynomial:
        return cls((Fraction(lo), Fraction(hi)), (poly,))

    @property
    def lo(self) -> Fraction:
        return self.breakpoints[0]

    @property
    def hi(self) -> Fraction:
        return self.breakpoints[-1]

    def intervals(self):
        for i, piece in enumerate(self.pieces):
            yield self.breakpoints[i], self.breakpoints[i + 1], piece

    def piece_index(self, x) -> int:
        x = Fraction(x)
        if not self.lo <= x <= self.hi:
            raise ValueError(f"{x} outside [{self.lo}, {self.hi}]")
        for i in range(len(self.pieces)):
            if x <= self.breakpoints[i + 1]:
                return i
        return len(self.pieces) - 1

    def __call__(self, x) -> Fraction:
        return self.pieces[self.piece_index(x)](Fraction(x))

    def integral(self) -> Fraction:
        return sum((p.integrate(a, b) for a, b, p in self.intervals()), Fraction(0))

    def moment(self, k: int = 1) -> Fraction:
        """integral of x^k f(x) over the domain."""
        xk = Polynomial((Fraction(0),) * k + (Fraction(1),))
        return sum(((p * xk).integrate(a, b) for a, b, p in self.intervals()), Fraction(0))

    def is_nonnegative(self) -> bool:
        return all(p.is_nonnegative_on(a, b) for a, b, p in self.intervals())

    def is_nonincreasing(self) -> bool:
        """Exact, piece by piece: the negated derivative is nonnegative."""
        return all((-p.derivative()).is_nonnegative_on(a, b) for a, b, p in self.intervals())

    def to_json(self) -> list[dict]:
        return [
            {
                "from": format_rational(a),
                "to": format_rational(b),
                "coeffs": [format_rational(c) for c in p.coeffs] or ["0/1"],
            }
            for a, b, p in self.intervals()
        ]

    @classmethod
    def from_json(cls, pieces: list[dict]) -> PiecewisePolynomial:
        if not pieces:
            raise ValueError("no pieces")
        bps = [parse_rational(pieces[0]["from"])]
        polys = []
        for entry in pieces:
            if parse_rational(entry["from"]) != bps[-1]:
                raise ValueError("pieces must be contiguous")
            bps.append(parse_rational(entry["to"]))
            polys.append(Polynomial(tuple(parse_rational(c) for c in entry["coeffs"])))
        return cls(tuple(bps), tuple(polys))
