"""Data models for lattice-point counting and sigma computations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from lct_certify.models import Exactness, SigmaMethod

Point = tuple[int, ...]


@dataclass(frozen=True)
class SimplexSpec:
    """Q_a = {x >= 0 : a.x < 1} (strict) or {x >= 0 : a.x <= 1}."""
    a: tuple[Fraction, ...]
    strict: bool = True

    def __post_init__(self):
        if not self.a:
            raise ValueError("covector must have at least one entry")
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))

    @property
    def n(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class SigmaBound:
    """A certified lower bound for sigma (strict) or sigma-bar (closed)."""
    n: int
    lam: Fraction
    strict: bool
    method: SigmaMethod
    value: Fraction
    bound_strict: bool

    @property
    def min_count(self) -> int:
        """The smallest integer the bounded count may take."""
        if self.bound_strict:
            return floor(self.value) + 1
        return ceil(self.value)


@dataclass
class SigmaResult:
    """A witnessed value for sigma_{n,lam} (strict) or its closed variant.

    The witness is the covector ``a`` with the lattice points of the
    hyperplane a.x = 1 split into ``included`` and ``excluded``; included
    points are the ones an infinitesimal perturbation of ``a`` pulls inside.
    """
    n: int
    lam: Fraction
    strict: bool
    value: int
    a: tuple[Fraction, ...]
    included: list[Point] = field(default_factory=list)
    excluded: list[Point] = field(default_factory=list)
    exactness: Exactness = Exactness.UPPER_BOUND
    lower_bound: int | None = None

    @property
    def witness(self) -> SimplexSpec:
        return SimplexSpec(self.a, strict=True)

    def sort_key(self) -> tuple:
        return (self.value, len(self.included), self.a, sorted(self.included))
