"""Thresholds and colengths of monomial ideals."""

from __future__ import annotations

from lct_certify.monomial.colength import colength, colength_witness
from lct_certify.monomial.ideal import ExponentVector, MonomialIdeal, dominates
from lct_certify.monomial.newton import (
    NewtonPolytopeQuery,
    diagonal_entry_time,
    lct_monomial,
    nonklt_check,
    nonlc_check,
    perturbed_normal,
    supporting_normal,
)

__all__ = [
    "ExponentVector",
    "MonomialIdeal",
    "NewtonPolytopeQuery",
    "colength",
    "colength_witness",
    "diagonal_entry_time",
    "dominates",
    "lct_monomial",
    "nonklt_check",
    "nonlc_check",
    "perturbed_normal",
    "supporting_normal",
]
