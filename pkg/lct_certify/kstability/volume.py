"""Volume curves, restricted-volume profiles and the barycenter bound.

A VolumeCurve models x -> vol(L - xF); a RestrictedVolumeProfile models the
restricted volume V(x) on F, related by vol(x) = n * integral_x^tau V.  The
barycenter b of V equals (1/L^n) * integral vol, and the sharp bound is
b <= tau/(n+1) + (n-1)eta/(n+1), with equality on the extremal profiles.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction

from lct_certify.arith import parse_rational
from lct_certify.errors import BadRangeError, NeverZeroError, ZeroMassError
from lct_certify.kstability.piecewise import PiecewisePolynomial, Polynomial, affine_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VolumeCurve:
    """x -> vol(L - xF) on [0, hi], checked exactly to be nonnegative and
    nonincreasing on every piece."""
    Ln: Fraction
    dim_n: int
    vol: PiecewisePolynomial

    def __post_init__(self):
        object.__setattr__(self, "Ln", Fraction(self.Ln))
        if self.Ln <= 0:
            raise ValueError("the degree L^n must be positive")
        if self.dim_n < 1:
            raise ValueError("dimension must be positive")
        if self.vol.lo != 0:
            raise ValueError("volume curves start at x = 0")
        if self.vol(0) != self.Ln:
            raise ValueError(f"vol(0) = {self.vol(0)} but L^n = {self.Ln}")
        if not self.vol.is_nonnegative():
            raise ValueError("volume is negative somewhere")
        if not self.vol.is_nonincreasing():
            raise ValueError("volume increases somewhere")

    @classmethod
    def from_json(cls, data: dict) -> VolumeCurve:
        vol = PiecewisePolynomial.from_json(data["pieces"])
        Ln = parse_rational(data["Ln"]) if "Ln" in data else vol(0)
        return cls(Ln, int(data["n"]), vol)


@dataclass(frozen=True)
class RestrictedVolumeProfile:
    """V on [0, tau], checked exactly to be nonnegative on every piece."""
    dim_n: int
    eta: Fraction
    tau: Fraction
    V: PiecewisePolynomial

    def __post_init__(self):
        object.__setattr__(self, "eta", Fraction(self.eta))
        object.__setattr__(self, "tau", Fraction(self.tau))
        if self.dim_n < 1:
            raise ValueError("dimension must be positive")
        if not 0 <= self.eta <= self.tau:
            raise BadRangeError(f"need 0 <= eta <= tau, got eta={self.eta}, tau={self.tau}")
        if self.V.lo != 0 or self.V.hi != self.tau:
            raise ValueError("profile must live on [0, tau]")
        if not self.V.is_nonnegative():
            raise ValueError("profile is negative somewhere")

    @classmethod
    def from_json(cls, data: dict) -> RestrictedVolumeProfile:
        return cls(
            int(data["n"]),
            parse_rational(data["eta"]),
            parse_rational(data["tau"]),
            PiecewisePolynomial.from_json(data["pieces"]),
        )


def tau_of(curve: VolumeCurve) -> Fraction:
    """The first breakpoint where the volume vanishes."""
    for bp in curve.vol.breakpoints:
        if curve.vol(bp) == 0:
            return bp
    raise NeverZeroError(f"volume is {curve.vol(curve.vol.hi)} at the right end {curve.vol.hi}")


def beta(A, curve: VolumeCurve) -> Fraction:
    """A * L^n - integral of vol."""
    A = Fraction(A)
    if A <= 0:
        raise ValueError("log discrepancy must be positive")
    tau = tau_of(curve)
    total = sum(
        (p.integrate(a, min(b, tau)) for a, b, p in curve.vol.intervals() if a < tau),
        Fraction(0),
    )
    return A * curve.Ln - total


def barycenter(profile: RestrictedVolumeProfile) -> Fraction:
    mass = profile.V.integral()
    if mass == 0:
        raise ZeroMassError("profile has zero mass")
    return profile.V.moment(1) / mass


def extremal_profile(n: int, eta, tau, V_eta) -> RestrictedVolumeProfile:
    """(x/eta)^(n-1) V_eta up to eta, then ((tau-x)/(tau-eta))^(n-1) V_eta."""
    eta, tau, V_eta = Fraction(eta), Fraction(tau), Fraction(V_eta)
    if eta <= 0 or eta > tau:
        raise BadRangeError(f"need 0 < eta <= tau, got eta={eta}, tau={tau}")
    if V_eta <= 0 or n < 1:
        raise ValueError("need V_eta > 0 and n >= 1")
    rising = affine_power(0, 1 / eta, n - 1) * V_eta
    if eta == tau:
        return RestrictedVolumeProfile(n, eta, tau, PiecewisePolynomial.single(0, tau, rising))
    falling = affine_power(tau / (tau - eta), -1 / (tau - eta), n - 1) * V_eta
    V = PiecewisePolynomial((Fraction(0), eta, tau), (rising, falling))
    return RestrictedVolumeProfile(n, eta, tau, V)


def concave_power_profile(knots, values, n: int, tau) -> RestrictedVolumeProfile:
    """V = g^(n-1) for the piecewise-linear g through (knots, values) on [0, eta],
    extended by the extremal tail on [eta, tau]; eta is the last knot.

    g must be concave and nonnegative with g(eta) > 0.
    """
    knots = [Fraction(k) for k in knots]
    values = [Fraction(v) for v in values]
    tau = Fraction(tau)
    if len(knots) != len(values) or len(knots) < 2 or knots[0] != 0:
        raise ValueError("need matching knots starting at 0")
    eta = knots[-1]
    if not 0 < eta <= tau:
        raise BadRangeError(f"need 0 < eta <= tau, got eta={eta}, tau={tau}")
    if any(v < 0 for v in values) or values[-1] <= 0:
        raise ValueError("g must be nonnegative with g(eta) > 0")
    slopes = [(v1 - v0) / (k1 - k0) for k0, k1, v0, v1 in zip(knots, knots[1:], values, values[1:])]
    if any(s1 > s0 for s0, s1 in zip(slopes, slopes[1:])):
        raise ValueError("g must be concave")
    pieces = []
    for k0, s, v0 in zip(knots, slopes, values):
        pieces.append(affine_power(v0 - s * k0, s, n - 1))
    bps = list(knots)
    if eta < tau:
        g_eta = values[-1]
        pieces.append(affine_power(tau / (tau - eta), -1 / (tau - eta), n - 1) * g_eta ** (n - 1))
        bps.append(tau)
    return RestrictedVolumeProfile(n, eta, tau, PiecewisePolynomial(tuple(bps), tuple(pieces)))


def vol_from_restricted(profile: RestrictedVolumeProfile) -> VolumeCurve:
    """vol(x) = n * integral_x^tau V, with the integration-by-parts identity asserted."""
    n, V = profile.dim_n, profile.V
    prims = [p.antiderivative() for p in V.pieces]
    masses = [prim(b) - prim(a) for (a, b, _), prim in zip(V.intervals(), prims)]
    pieces = []
    for i, ((a, b, _), prim) in enumerate(zip(V.intervals(), prims)):
        tail = sum(masses[i + 1:], Fraction(0))
        # n * (prim(b) - prim(x) + tail)
        pieces.append((Polynomial.constant(prim(b) + tail) - prim) * n)
    vol = PiecewisePolynomial(V.breakpoints, tuple(pieces))
    curve = VolumeCurve(vol(0), n, vol)
    if vol.integral() != n * V.moment(1):
        raise RuntimeError("integration by parts identity fails")
    return curve


def logconcave_check(f: PiecewisePolynomial, samples: int = 32) -> bool:
    """Midpoint log-concavity f((x+y)/2)^2 >= f(x) f(y) on a grid of ``samples``
    equal steps; a sampled check, not a proof."""
    if samples < 1:
        raise ValueError("samples must be positive")
    grid = [f.lo + (f.hi - f.lo) * Fraction(i, samples) for i in range(samples + 1)]
    values = [f(x) for x in grid]
    for i in range(len(grid)):
        for j in range(i + 2, len(grid)):
            mid = f((grid[i] + grid[j]) / 2)
            if mid * mid < values[i] * values[j]:
                logger.debug("log-concavity fails between %s and %s", grid[i], grid[j])
                return False
    return True


def criterion_weights(n: int) -> tuple[Fraction, Fraction]:
    """Coefficients of tau and eta in the sharp barycenter bound."""
    return Fraction(1, n + 1), Fraction(n - 1, n + 1)


@dataclass(frozen=True)
class BarycenterCheck:
    b: Fraction
    bound: Fraction
    holds: bool
    equality: bool
    fujita_bound: Fraction

    @property
    def fujita_holds(self) -> bool:
        return self.b <= self.fujita_bound


def fujita_bound(profile: RestrictedVolumeProfile) -> Fraction:
    """The weaker n*tau/(n+1), which needs no movable threshold."""
    return profile.dim_n * profile.tau / (profile.dim_n + 1)


def check_barycenter_bound(profile: RestrictedVolumeProfile) -> BarycenterCheck:
    b = barycenter(profile)
    w_tau, w_eta = criterion_weights(profile.dim_n)
    bound = w_tau * profile.tau + w_eta * profile.eta
    return BarycenterCheck(b, bound, b <= bound, b == bound, fujita_bound(profile))


def beta_from_profile(A, profile: RestrictedVolumeProfile) -> Fraction:
    return beta(A, vol_from_restricted(profile))


class BetaSign(enum.Enum):
    POSITIVE = "positive"
    NONNEGATIVE = "nonnegative"
    UNDECIDED = "undecided"


def beta_sign_certificate(A, tau, eta, n: int) -> BetaSign:
    """Sign of beta implied by the barycenter bound: the bound <= A gives
    beta >= 0, the bound < A gives beta > 0."""
    A, tau, eta = Fraction(A), Fraction(tau), Fraction(eta)
    w_tau, w_eta = criterion_weights(n)
    bound = w_tau * tau + w_eta * eta
    if bound < A:
        return BetaSign.POSITIVE
    if bound == A:
        return BetaSign.NONNEGATIVE
    return BetaSign.UNDECIDED
