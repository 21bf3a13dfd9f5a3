"""Monomial ideals given by exponent vectors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path

ExponentVector = tuple[int, ...]


def dominates(g: ExponentVector, h: ExponentVector) -> bool:
    """True when ``g`` is componentwise >= ``h``."""
    return all(x >= y for x, y in zip(g, h))


def _minimal_generators(gens: set[ExponentVector]) -> tuple[ExponentVector, ...]:
    kept = [g for g in gens if not any(h != g and dominates(g, h) for h in gens)]
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in k[x_1..x_n], stored by its minimal generators."""
    dimension: int
    generators: tuple[ExponentVector, ...]

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be at least 1")
        if not self.generators:
            raise ValueError("a monomial ideal needs at least one generator")
        gens = set()
        for g in self.generators:
            g = tuple(int(x) for x in g)
            if len(g) != self.dimension:
                raise ValueError(f"generator {g} does not have length {self.dimension}")
            if any(x < 0 for x in g):
                raise ValueError(f"generator {g} has a negative exponent")
            gens.add(g)
        if (0,) * self.dimension in gens:
            raise ValueError("the unit ideal has no finite threshold")
        object.__setattr__(self, "generators", _minimal_generators(gens))

    @classmethod
    def from_generators(cls, generators) -> MonomialIdeal:
        generators = [tuple(g) for g in generators]
        if not generators:
            raise ValueError("a monomial ideal needs at least one generator")
        return cls(len(generators[0]), tuple(generators))

    @classmethod
    def maximal_ideal_power(cls, n: int, k: int) -> MonomialIdeal:
        """m^k: every monomial of degree ``k`` in ``n`` variables."""
        if k < 1:
            raise ValueError("k must be positive")
        gens = [
            c for c in itertools.product(range(k + 1), repeat=n) if sum(c) == k
        ]
        return cls(n, tuple(gens))

    @classmethod
    def parse(cls, text: str) -> MonomialIdeal:
        """One generator per line as space-separated integers; ``#`` lines are comments."""
        gens = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                gens.append(tuple(int(tok) for tok in line.split()))
            except ValueError as exc:
                raise ValueError(f"line {lineno}: not a list of integers: {line!r}") from exc
        return cls.from_generators(gens)

    @classmethod
    def from_file(cls, path: Path) -> MonomialIdeal:
        return cls.parse(Path(path).read_text())

    def with_generator(self, g: ExponentVector) -> MonomialIdeal:
        return MonomialIdeal(self.dimension, self.generators + (tuple(g),))

    def contains(self, monomial: ExponentVector) -> bool:
        return any(dominates(monomial, g) for g in self.generators)

    def pure_powers(self) -> list[int | None]:
        """Smallest k with k*e_i in the ideal, per variable (None if absent)."""
        out: list[int | None] = []
        for i in range(self.dimension):
            ks = [
                g[i] for g in self.generators
                if all(x == 0 for j, x in enumerate(g) if j != i)
            ]
            out.append(min(ks) if ks else None)
        return out

    @property
    def is_zero_dimensional(self) -> bool:
        return all(p is not None for p in self.pure_powers())

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in g) for g in self.generators) + "\n"
