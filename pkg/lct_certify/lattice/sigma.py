"""Certified lower bounds for sigma_{n,lam} and its closed variant."""

from __future__ import annotations

from fractions import Fraction
from math import floor

from lct_certify.arith import power_over_factorial
from lct_certify.errors import MethodInapplicableError
from lct_certify.lattice.models import SigmaBound
from lct_certify.lattice.pick import PickCertificate, corner_polygon, pick_certificate
from lct_certify.models import SigmaMethod


def _pick2d(n: int, lam: Fraction, strict: bool) -> tuple[Fraction, bool]:
    if n != 2:
        raise MethodInapplicableError("PICK2D", f"needs n = 2, got {n}")
    if lam.denominator != 1 or lam < 1:
        raise MethodInapplicableError("PICK2D", f"needs a positive integer lambda, got {lam}")
    m = int(lam)
    if strict:
        return Fraction(4 * m * m + 3 * m + 3, 2), False
    return Fraction(m * (2 * m + 1)), False


def _cube(n: int, lam: Fraction, strict: bool) -> tuple[Fraction, bool]:
    if lam != 1:
        raise MethodInapplicableError("CUBE", f"needs lambda = 1, got {lam}")
    # every vertex of the unit cube except (1, ..., 1) satisfies a.x < 1
    return Fraction(2**n - 1), False


def _volume(n: int, lam: Fraction, strict: bool) -> tuple[Fraction, bool]:
    if lam != 1:
        raise MethodInapplicableError("VOLUME", f"needs lambda = 1, got {lam}")
    return power_over_factorial(n), n >= 2


def _block(n: int, lam: Fraction, strict: bool) -> tuple[Fraction, bool]:
    if not 0 < lam < 1:
        raise MethodInapplicableError("BLOCK", f"needs 0 < lambda < 1, got {lam}")
    m = floor(n * lam)
    # vertices of the cube on the first m coordinates; the top one may sit on the boundary
    return Fraction(2**m if strict else 2**m - 1), False


_METHODS = {
    SigmaMethod.PICK2D: _pick2d,
    SigmaMethod.CUBE: _cube,
    SigmaMethod.VOLUME: _volume,
    SigmaMethod.BLOCK: _block,
}


def sigma_lower_bound(n: int, lam, strict: bool, method: SigmaMethod) -> SigmaBound:
    if n < 1:
        raise ValueError("n must be positive")
    lam = Fraction(lam)
    value, bound_strict = _METHODS[method](n, lam, strict)
    return SigmaBound(n, lam, strict, method, value, bound_strict)


def pick_witness(m: int, strict: bool) -> tuple[PickCertificate, Fraction]:
    """The corner polygon at the smallest admissible (u, v), with its Pick count.

    Returns the certificate together with the bound (m+1)(u+v)/2 + 2 that the
    polygon count dominates.  The closed sigma bound is this count minus the
    corner (m, m).
    """
    u, v = (2 * m, 2 * m - 1) if strict else (2 * m - 1, 2 * m - 1)
    cert = pick_certificate(corner_polygon(m, u, v))
    bound = Fraction((m + 1) * (u + v), 2) + 2
    return cert, bound
