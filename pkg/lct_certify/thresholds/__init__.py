"""Dimension-threshold certifiers."""

from __future__ import annotations

from lct_certify.thresholds.checks import (
    ConditionalVerdicts,
    TableRow,
    check_conditional,
    check_lct_cpi,
    check_superrigidity_dim,
    conditional_verdicts,
    domain_start,
)
from lct_certify.thresholds.claims import (
    CLAIMS,
    ClaimResult,
    DimensionClaim,
    evaluate_claim,
    evaluate_claims,
    minimal_by_certificate,
)
from lct_certify.thresholds.reductions import ReductionReport, verify_sufficiency_reductions
from lct_certify.thresholds.search import ThresholdQuery, ThresholdReport, conditional_N, min_n

__all__ = [
    "CLAIMS",
    "ClaimResult",
    "ConditionalVerdicts",
    "DimensionClaim",
    "ReductionReport",
    "TableRow",
    "ThresholdQuery",
    "ThresholdReport",
    "check_conditional",
    "check_lct_cpi",
    "check_superrigidity_dim",
    "conditional_N",
    "conditional_verdicts",
    "domain_start",
    "evaluate_claim",
    "evaluate_claims",
    "min_n",
    "minimal_by_certificate",
    "verify_sufficiency_reductions",
]
