"""Intersection forms on surfaces and the multiplicity arithmetic they feed."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from lct_certify.arith import QuadraticSurd, compare_surd
from lct_certify.errors import DimensionMismatchError, NoSolutionError
from lct_certify.models import Ordering

LINE_FORM = ((6, 1), (1, -2))
CONIC_FORM = ((6, 2), (2, -2))


@dataclass(frozen=True)
class IntersectionForm:
    gram: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...] = ()

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        k = len(gram)
        if not 1 <= k <= 3 or any(len(row) != k for row in gram):
            raise ValueError("gram matrix must be square of size 1 to 3")
        if any(gram[i][j] != gram[j][i] for i in range(k) for j in range(k)):
            raise ValueError("gram matrix must be symmetric")
        labels = tuple(self.basis_labels) or tuple(f"e{i}" for i in range(k))
        if len(labels) != k:
            raise ValueError("one label per basis element")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "basis_labels", labels)

    @property
    def size(self) -> int:
        return len(self.gram)

    @classmethod
    def parse(cls, text: str, labels: str = "") -> IntersectionForm:
        """``"6,1;1,-2"`` row by row."""
        rows = tuple(tuple(int(x) for x in row.split(",")) for row in text.split(";"))
        return cls(rows, tuple(lab for lab in labels.split(",") if lab))


@dataclass(frozen=True)
class DivisorClass:
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @classmethod
    def of(cls, *coefficients) -> DivisorClass:
        return cls(tuple(coefficients))

    def minus(self, s, index: int) -> DivisorClass:
        coeffs = list(self.coefficients)
        coeffs[index] -= Fraction(s)
        return DivisorClass(tuple(coeffs))


def pairing(form: IntersectionForm, u: DivisorClass, v: DivisorClass) -> Fraction:
    k = form.size
    if len(u.coefficients) != k or len(v.coefficients) != k:
        raise DimensionMismatchError(
            f"form has size {k}, classes have {len(u.coefficients)} and {len(v.coefficients)} entries"
        )
    return sum(
        (u.coefficients[i] * form.gram[i][j] * v.coefficients[j] for i in range(k) for j in range(k)),
        Fraction(0),
    )


def self_intersection_polynomial(
    form: IntersectionForm, base: DivisorClass, curve_index: int
) -> tuple[Fraction, Fraction, Fraction]:
    """(c0, c1, c2) with (base - s*curve)^2 = c0 + c1*s + c2*s^2."""
    e = DivisorClass(tuple(1 if i == curve_index else 0 for i in range(form.size)))
    return pairing(form, base, base), -2 * pairing(form, base, e), pairing(form, e, e)


def max_mult_from_selfint(
    form: IntersectionForm, base: DivisorClass, curve_index: int, lower: int
) -> int:
    """Largest integer s >= 0 with (base - s*curve)^2 >= lower."""
    c0, c1, c2 = self_intersection_polynomial(form, base, curve_index)
    if c2 > 0 or (c2 == 0 and c1 >= 0):
        raise ValueError("self-intersection is not eventually decreasing in s")

    def ok(s: int) -> bool:
        return c0 + c1 * s + c2 * s * s >= lower

    if not ok(0):
        raise NoSolutionError(f"(base)^2 = {c0} is already below {lower}")
    # past the vertex the quadratic decreases, so the admissible set is [0, s_max]
    s = 0
    step = 1
    while ok(s + step):
        s += step
        step *= 2
    while step > 1:
        step //= 2
        if ok(s + step):
            s += step
    return s


@dataclass(frozen=True)
class GammaBound:
    value: QuadraticSurd
    less_than_4: bool


def gamma_mult_bound(d: int, M2H: int) -> GammaBound:
    """d/3 + (2/3) sqrt(M2H), compared with 4."""
    if d < 0 or M2H < 0:
        raise ValueError("d and M2H must be nonnegative")
    value = QuadraticSurd(Fraction(d, 3), Fraction(2, 3), M2H)
    return GammaBound(value, compare_surd(value, 4) == Ordering.LESS)


def multiplicity_threshold(weight_d, weight_m, mult_d) -> Fraction:
    """Lower bound for mult_C(M^2) along a curve C where the pair
    (weight_d * D + weight_m * M) is not log canonical:
    weight_m^2 * mult_C(M^2) > 4 (1 - weight_d * mult_C D)."""
    weight_d, weight_m, mult_d = Fraction(weight_d), Fraction(weight_m), Fraction(mult_d)
    if weight_m <= 0:
        raise ValueError("weight_m must be positive")
    return 4 * (1 - weight_d * mult_d) / (weight_m * weight_m)


def degree_contradiction(threshold: Fraction, degree: int, m2h: int) -> bool:
    """True when degree * mult_C(M^2) > degree * threshold already exceeds (M^2.H)."""
    return degree * Fraction(threshold) >= m2h
