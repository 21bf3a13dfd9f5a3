"""Tests for volume curves, barycenters and beta."""

import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from lct_certify.errors import BadRangeError, NeverZeroError, ZeroMassError
from lct_certify.kstability import (
    BetaSign,
    PiecewisePolynomial,
    Polynomial,
    RestrictedVolumeProfile,
    VolumeCurve,
    affine_power,
    barycenter,
    beta,
    beta_from_profile,
    beta_sign_certificate,
    check_barycenter_bound,
    concave_power_profile,
    extremal_profile,
    logconcave_check,
    tau_of,
    vol_from_restricted,
)

FIXTURES = Path(__file__).parent / "fixtures"


def _make_curve(n, breakpoints, pieces):
    vol = PiecewisePolynomial(tuple(breakpoints), tuple(Polynomial(tuple(p)) for p in pieces))
    return VolumeCurve(vol(0), n, vol)


def _make_concave_profile(rng):
    """V = g^(n-1) for a random concave piecewise-linear g, or None if the draw is unusable."""
    n = rng.randint(2, 5)
    k = rng.randint(1, 4)
    steps = [Fraction(rng.randint(1, 6), rng.randint(1, 3)) for _ in range(k)]
    knots = [Fraction(0)]
    for step in steps:
        knots.append(knots[-1] + step)
    slopes = sorted((Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(k)), reverse=True)
    values = [Fraction(rng.randint(0, 8))]
    for step, slope in zip(steps, slopes):
        values.append(values[-1] + slope * step)
    if any(v < 0 for v in values) or values[-1] <= 0:
        return None
    eta = knots[-1]
    if slopes[-1] < 0:
        reach = values[-1] / -slopes[-1]
        tau = eta + reach * Fraction(rng.randint(0, 10), 10)
    else:
        tau = eta + Fraction(rng.randint(0, 20), 4)
    return concave_power_profile(knots, values, n, tau)


class TestPolynomial:
    def test_arithmetic(self):
        p = Polynomial.linear(1, 1)
        assert (p**3).coeffs == (1, 3, 3, 1)
        assert affine_power(1, 1, 3) == p**3
        assert (p * 2 - p).coeffs == p.coeffs
        assert (p - p).is_zero
        assert Polynomial((1, 2, 0, 0)).degree == 1

    def test_calculus(self):
        p = Polynomial((Fraction(0), Fraction(0), Fraction(3)))
        assert p.integrate(0, 2) == 8
        assert p.integrate(Fraction(1, 2), 1) == Fraction(7, 8)
        assert p.derivative() == Polynomial((0, 6))
        assert p.antiderivative() == Polynomial((0, 0, 0, 1))
        assert Polynomial().integrate(0, 5) == 0

    def test_sympy_round_trip(self):
        p = Polynomial((Fraction(1, 3), 0, Fraction(-7, 2)))
        assert Polynomial.from_poly(p.as_poly()) == p
        assert Polynomial.from_poly(Polynomial().as_poly()).is_zero

    @pytest.mark.parametrize(
        "coeffs, lo, hi, expected",
        [
            ((Fraction(3, 25), Fraction(-7, 10), 1), 0, 1, False),
            ((Fraction(3, 25), Fraction(-7, 10), 1), 0, Fraction(3, 10), True),
            ((Fraction(3, 25), Fraction(-7, 10), 1), Fraction(2, 5), 1, True),
            ((Fraction(1, 4), -1, 1), 0, 1, True),
            ((0, 0, 0, 1), -1, 1, False),
            ((0, 0, 0, 1), 0, 1, True),
            ((), 0, 1, True),
            ((-1,), 0, 1, False),
        ],
    )
    def test_nonnegative_on(self, coeffs, lo, hi, expected):
        assert Polynomial(coeffs).is_nonnegative_on(lo, hi) is expected

    def test_dip_between_quarter_points(self):
        # (x - 3/10)(x - 2/5) is positive at 0, 1/4, 1/2, 3/4 and 1
        p = Polynomial((Fraction(3, 25), Fraction(-7, 10), 1))
        assert all(p(Fraction(j, 4)) > 0 for j in range(5))
        assert not p.is_nonnegative_on(0, 1)

    def test_rejects_negative_power(self):
        with pytest.raises(ValueError):
            Polynomial.linear(0, 1) ** -1


class TestPiecewisePolynomial:
    def test_evaluation_and_moments(self):
        f = PiecewisePolynomial((0, 1, 2), (Polynomial((0, 1)), Polynomial((2, -1))))
        assert f(Fraction(1, 2)) == Fraction(1, 2)
        assert f(Fraction(3, 2)) == Fraction(1, 2)
        assert f.integral() == 1
        assert f.moment(1) == 1

    def test_rejects_discontinuity(self):
        with pytest.raises(ValueError, match="discontinuous"):
            PiecewisePolynomial((0, 1, 2), (Polynomial((0, 1)), Polynomial((3, -1))))

    def test_rejects_bad_breakpoints(self):
        with pytest.raises(ValueError):
            PiecewisePolynomial((0, 0), (Polynomial((1,)),))
        with pytest.raises(ValueError):
            PiecewisePolynomial((0, 1), ())

    def test_outside_domain(self):
        f = PiecewisePolynomial.single(0, 1, Polynomial((1,)))
        with pytest.raises(ValueError):
            f(2)

    def test_json(self):
        f = PiecewisePolynomial((0, 1, 2), (Polynomial((0, 1)), Polynomial((2, -1))))
        assert PiecewisePolynomial.from_json(json.loads(json.dumps(f.to_json()))) == f
        with pytest.raises(ValueError, match="contiguous"):
            PiecewisePolynomial.from_json(
                [
                    {"from": "0", "to": "1", "coeffs": ["1"]},
                    {"from": "2", "to": "3", "coeffs": ["1"]},
                ]
            )
        with pytest.raises(ValueError):
            PiecewisePolynomial.from_json([])


class TestVolumeCurve:
    def test_from_fixture(self):
        curve = VolumeCurve.from_json(json.loads((FIXTURES / "p1_curve.json").read_text()))
        assert curve.Ln == 2
        assert tau_of(curve) == 2

    def test_tau_at_interior_breakpoint(self):
        curve = _make_curve(1, (0, 1, 3), ((2, -1), (Fraction(3, 2), Fraction(-1, 2))))
        assert tau_of(curve) == 3

    def test_never_zero(self):
        curve = _make_curve(1, (0, 1), ((2, -1),))
        with pytest.raises(NeverZeroError):
            tau_of(curve)

    def test_validation(self):
        vol = PiecewisePolynomial.single(0, 1, Polynomial((1, 1)))
        with pytest.raises(ValueError, match="increases"):
            VolumeCurve(1, 1, vol)
        with pytest.raises(ValueError):
            VolumeCurve(3, 1, PiecewisePolynomial.single(0, 2, Polynomial((2, -1))))
        with pytest.raises(ValueError):
            VolumeCurve(0, 1, PiecewisePolynomial.single(0, 1, Polynomial()))

    def test_increase_between_quarter_points(self):
        # vol' = -(x - 3/10)(x - 2/5) is positive only on (3/10, 2/5)
        vol = PiecewisePolynomial.single(
            0, 1, Polynomial((1, Fraction(-3, 25), Fraction(7, 20), Fraction(-1, 3)))
        )
        quarters = [vol(Fraction(j, 4)) for j in range(5)]
        assert all(b < a for a, b in zip(quarters, quarters[1:]))
        assert vol.is_nonnegative()
        assert not vol.is_nonincreasing()
        with pytest.raises(ValueError, match="increases"):
            VolumeCurve(1, 1, vol)

    def test_negative_profile_between_quarter_points(self):
        V = PiecewisePolynomial.single(0, 1, Polynomial((Fraction(3, 25), Fraction(-7, 10), 1)))
        with pytest.raises(ValueError, match="negative"):
            RestrictedVolumeProfile(2, 1, 1, V)


class TestBeta:
    def test_projective_line(self):
        curve = _make_curve(1, (0, 2), ((2, -1),))
        assert beta(1, curve) == 0
        assert beta(2, curve) == 2

    def test_projective_space_hyperplane(self):
        for n in range(1, 7):
            curve = _make_curve(n, (0, n + 1), (affine_power(n + 1, -1, n).coeffs,))
            assert beta(1, curve) == 0

    def test_linear_in_log_discrepancy(self):
        curve = _make_curve(2, (0, 1, 3), ((4, -2), (3, -1)))
        for A in (Fraction(1, 2), Fraction(1), Fraction(7, 3)):
            assert beta(A + 1, curve) - beta(A, curve) == curve.Ln

    def test_rejects_nonpositive_discrepancy(self):
        with pytest.raises(ValueError):
            beta(0, _make_curve(1, (0, 2), ((2, -1),)))

    def test_sign_certificate(self):
        assert beta_sign_certificate(1, 2, 1, 3) == BetaSign.NONNEGATIVE
        assert beta_sign_certificate(2, 2, 1, 3) == BetaSign.POSITIVE
        assert beta_sign_certificate(Fraction(1, 2), 2, 1, 3) == BetaSign.UNDECIDED

    def test_certified_sign_matches_beta(self):
        profile = extremal_profile(3, 1, 2, 1)
        assert beta_from_profile(1, profile) == 0
        assert beta_from_profile(2, profile) > 0


class TestBarycenter:
    def test_extremal_fixture(self):
        data = json.loads((FIXTURES / "extremal_profile.json").read_text())
        profile = RestrictedVolumeProfile.from_json(data)
        assert profile == extremal_profile(3, 1, 2, 1)
        check = check_barycenter_bound(profile)
        assert check.b == 1
        assert check.bound == 1
        assert check.holds and check.equality

    def test_extremal_pieces(self):
        profile = extremal_profile(3, 1, 2, 1)
        assert profile.V.pieces == (Polynomial((0, 0, 1)), Polynomial((4, -4, 1)))
        profile = extremal_profile(2, 1, 3, 2)
        assert profile.V.pieces == (Polynomial((0, 2)), Polynomial((3, -1)))

    def test_extremal_equality_grid(self):
        for n in range(2, 7):
            for tau in range(1, 6):
                for eta_num in range(1, 4 * tau + 1):
                    eta = Fraction(eta_num, 4)
                    check = check_barycenter_bound(extremal_profile(n, eta, tau, 1))
                    assert check.equality, (n, eta, tau)

    def test_falling_power_at_eta_zero(self):
        for n in range(2, 7):
            tau = Fraction(5, 2)
            V = PiecewisePolynomial.single(0, tau, affine_power(tau, -1, n - 1))
            check = check_barycenter_bound(RestrictedVolumeProfile(n, 0, tau, V))
            assert check.b == tau / (n + 1)
            assert check.equality

    def test_constant_profile(self):
        profile = RestrictedVolumeProfile(2, 2, 2, PiecewisePolynomial.single(0, 2, Polynomial((1,))))
        check = check_barycenter_bound(profile)
        assert check.b == 1
        assert check.bound == Fraction(4, 3)
        assert check.holds and not check.equality
        assert check.fujita_holds

    def test_random_concave_profiles(self):
        rng = random.Random(17)
        checked = draws = 0
        while checked < 500:
            draws += 1
            assert draws < 20000
            profile = _make_concave_profile(rng)
            if profile is None:
                continue
            check = check_barycenter_bound(profile)
            assert check.holds, profile
            curve = vol_from_restricted(profile)
            assert curve.vol.integral() / curve.Ln == check.b
            checked += 1
        assert checked == 500

    def test_zero_mass(self):
        profile = RestrictedVolumeProfile(2, 1, 1, PiecewisePolynomial.single(0, 1, Polynomial()))
        with pytest.raises(ZeroMassError):
            barycenter(profile)
        with pytest.raises(ValueError):
            vol_from_restricted(profile)

    def test_bad_ranges(self):
        with pytest.raises(BadRangeError):
            extremal_profile(3, 0, 2, 1)
        with pytest.raises(BadRangeError):
            extremal_profile(3, 3, 2, 1)
        with pytest.raises(BadRangeError):
            concave_power_profile([0, 2], [1, 1], 2, 1)
        with pytest.raises(ValueError, match="concave"):
            concave_power_profile([0, 1, 2], [0, 1, 3], 2, 2)


class TestVolFromRestricted:
    def test_constant_profile_on_a_line(self):
        profile = RestrictedVolumeProfile(1, 2, 2, PiecewisePolynomial.single(0, 2, Polynomial((1,))))
        curve = vol_from_restricted(profile)
        assert curve.Ln == 2
        assert curve.vol(1) == 1
        assert tau_of(curve) == 2

    def test_extremal_profile(self):
        curve = vol_from_restricted(extremal_profile(3, 1, 2, 1))
        assert curve.Ln == 2
        assert curve.vol(1) == 1
        assert curve.vol(2) == 0


class TestLogConcavity:
    def test_kink_is_not_logconcave(self):
        f = PiecewisePolynomial((0, Fraction(1, 2), 1), (Polynomial((1, -1)), Polynomial((0, 1))))
        assert not logconcave_check(f)

    def test_powers_of_concave_functions(self):
        assert logconcave_check(extremal_profile(3, 1, 2, 1).V)
        assert logconcave_check(PiecewisePolynomial.single(0, 1, Polynomial((1,))))

    def test_rejects_empty_grid(self):
        with pytest.raises(ValueError):
            logconcave_check(PiecewisePolynomial.single(0, 1, Polynomial((1,))), samples=0)
