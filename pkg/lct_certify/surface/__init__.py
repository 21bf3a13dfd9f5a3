"""Exact intersection arithmetic on surfaces."""

from __future__ import annotations

from lct_certify.surface.forms import (
    CONIC_FORM,
    LINE_FORM,
    DivisorClass,
    GammaBound,
    IntersectionForm,
    degree_contradiction,
    gamma_mult_bound,
    max_mult_from_selfint,
    multiplicity_threshold,
    pairing,
    self_intersection_polynomial,
)

__all__ = [
    "CONIC_FORM",
    "LINE_FORM",
    "DivisorClass",
    "GammaBound",
    "IntersectionForm",
    "degree_contradiction",
    "gamma_mult_bound",
    "max_mult_from_selfint",
    "multiplicity_threshold",
    "pairing",
    "self_intersection_polynomial",
]
