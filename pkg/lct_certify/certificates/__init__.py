"""Certificate combinator and section-count calculators."""

from __future__ import annotations

from lct_certify.certificates.lct import (
    GEOMETRIC_ASSUMPTIONS,
    ColengthBound,
    HypersurfaceBound,
    LctCertificate,
    certify_lct,
    colength_bound_from_sigma,
    conclusion_from_estimate,
    estimate_lambda,
    half_lct_from_volume,
    hypersurface_lct_bound,
    max_bad_points,
    point_colength_bound,
)
from lct_certify.certificates.sections import h0_k3, h0_projective

__all__ = [
    "GEOMETRIC_ASSUMPTIONS",
    "ColengthBound",
    "HypersurfaceBound",
    "LctCertificate",
    "certify_lct",
    "colength_bound_from_sigma",
    "conclusion_from_estimate",
    "estimate_lambda",
    "h0_k3",
    "h0_projective",
    "half_lct_from_volume",
    "hypersurface_lct_bound",
    "max_bad_points",
    "point_colength_bound",
]
