"""Volume curves, barycenters and the beta invariant."""

from __future__ import annotations

from lct_certify.kstability.piecewise import PiecewisePolynomial, Polynomial, affine_power
from lct_certify.kstability.volume import (
    BarycenterCheck,
    BetaSign,
    RestrictedVolumeProfile,
    VolumeCurve,
    barycenter,
    beta,
    beta_from_profile,
    beta_sign_certificate,
    check_barycenter_bound,
    concave_power_profile,
    criterion_weights,
    extremal_profile,
    fujita_bound,
    logconcave_check,
    tau_of,
    vol_from_restricted,
)

__all__ = [
    "BarycenterCheck",
    "BetaSign",
    "PiecewisePolynomial",
    "Polynomial",
    "RestrictedVolumeProfile",
    "VolumeCurve",
    "affine_power",
    "barycenter",
    "beta",
    "beta_from_profile",
    "beta_sign_certificate",
    "check_barycenter_bound",
    "concave_power_profile",
    "criterion_weights",
    "extremal_profile",
    "fujita_bound",
    "logconcave_check",
    "tau_of",
    "vol_from_restricted",
]
