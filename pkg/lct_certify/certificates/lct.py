"""Turning section counts and colength bounds into lct lower bounds.

Two normalisations of lambda are in use.  A ColengthBound stores the
subscript of sigma_{n,lam}, for which the conclusion is lct >= 1/(lam+1).
The estimate form takes lam' = 1/lam and concludes lam'/(lam'+1).
``estimate_lambda`` is the only place converting between them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from lct_certify.errors import InconclusiveCertificateError
from lct_certify.lattice import SigmaBound, sigma_lower_bound
from lct_certify.models import Flavor, SigmaMethod
from lct_certify.monomial import MonomialIdeal, lct_monomial

logger = logging.getLogger(__name__)

GEOMETRIC_ASSUMPTIONS = (
    "L - (K_X + Delta) is nef and big (not checked)",
    "(X, Delta) is klt outside a finite set of points (not checked)",
)


@dataclass(frozen=True)
class ColengthBound:
    lam: Fraction
    bound: Fraction
    bound_strict: bool
    flavor: Flavor

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "bound", Fraction(self.bound))
        if self.bound <= 0:
            raise ValueError("colength bound must be positive")
        if self.lam <= 0:
            raise ValueError("lambda must be positive")


@dataclass(frozen=True)
class LctCertificate:
    h0: int
    colength_bound: ColengthBound | None
    conclusion: Fraction
    conclusion_strict: bool
    assumptions: tuple[str, ...] = field(default=GEOMETRIC_ASSUMPTIONS)

    def describe(self) -> str:
        rel = ">" if self.conclusion_strict else ">="
        return f"lct {rel} {self.conclusion}"


def estimate_lambda(cb: ColengthBound) -> Fraction:
    """The lambda of the estimate form, 1/lam."""
    return 1 / cb.lam


def conclusion_from_estimate(lam_estimate: Fraction) -> Fraction:
    return lam_estimate / (lam_estimate + 1)


def colength_bound_from_sigma(bound: SigmaBound) -> ColengthBound:
    """sigma bounds non-lc colengths, the closed variant bounds non-klt ones."""
    flavor = Flavor.NON_LC if bound.strict else Flavor.NON_KLT
    return ColengthBound(bound.lam, bound.value, bound.bound_strict, flavor)


def point_colength_bound(n: int) -> ColengthBound:
    """Colength bound for ideals J with (A^n; J^n) not lc.

    Such J has lct(J) < n.  The only colength-one ideal is the maximal ideal,
    whose lct is exactly n, so every such J has colength >= 2.
    """
    maximal = MonomialIdeal.maximal_ideal_power(n, 1)
    if lct_monomial(maximal) != n:
        raise RuntimeError("lct of the maximal ideal is not n")
    return ColengthBound(Fraction(1, n), Fraction(2), False, Flavor.NON_LC)


def certify_lct(h0: int, cb: ColengthBound) -> LctCertificate:
    if h0 < 0:
        raise ValueError("h0 must be nonnegative")
    if h0 == 0:
        return LctCertificate(0, cb, Fraction(1), False)
    below = h0 < cb.bound or (cb.bound_strict and h0 <= cb.bound)
    if not below:
        raise InconclusiveCertificateError(
            f"h0 = {h0} is not below the colength bound {cb.bound}"
        )
    conclusion = 1 / (cb.lam + 1)
    if conclusion != conclusion_from_estimate(estimate_lambda(cb)):
        raise RuntimeError("lambda normalisations disagree")
    cert = LctCertificate(h0, cb, conclusion, cb.flavor == Flavor.NON_KLT)
    logger.debug("h0=%d against %s: %s", h0, cb.bound, cert.describe())
    return cert


def max_bad_points(h0: int, per_point_bound: int) -> int:
    """How many disjoint bad points the section count leaves room for."""
    if per_point_bound < 1:
        raise ValueError("per-point bound must be at least 1")
    return h0 // per_point_bound


def half_lct_from_volume(n: int, h0: int) -> LctCertificate:
    """h0 <= n^n/n! gives lct > 1/2 through the volume bound on the closed sigma."""
    cb = colength_bound_from_sigma(sigma_lower_bound(n, 1, False, SigmaMethod.VOLUME))
    return certify_lct(h0, cb)


@dataclass(frozen=True)
class HypersurfaceBound:
    n: int
    d: int
    lct: Fraction
    certificate: LctCertificate


def hypersurface_lct_bound(n: int, d: int) -> HypersurfaceBound:
    """lct(X; D) >= min(1, n/d) for D ~ H on a smooth degree-d hypersurface X^n.

    For d <= n the twist O(-H) has no sections and lct >= 1.  For d >= n+1 a
    general projection to P^n turns the question into the point certificate
    for (P^n; (n+1)/d D), giving n/(n+1), which rescales to n/d.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if d <= n:
        cert = certify_lct(0, point_colength_bound(n))
        return HypersurfaceBound(n, d, Fraction(1), cert)
    # L = 0 on P^n, so the section count is h0(O) = 1
    cert = certify_lct(1, point_colength_bound(n))
    return HypersurfaceBound(n, d, cert.conclusion * Fraction(n + 1, d), cert)
