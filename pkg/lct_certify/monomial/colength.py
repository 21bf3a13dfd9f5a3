"""Colengths of monomial ideals by staircase enumeration."""

from __future__ import annotations

import itertools

from lct_certify.lattice.models import SimplexSpec
from lct_certify.monomial.ideal import MonomialIdeal
from lct_certify.monomial.newton import supporting_normal


def colength(ideal: MonomialIdeal) -> int | None:
    """dim k[x]/J, or None when the quotient is infinite-dimensional."""
    powers = ideal.pure_powers()
    if any(p is None for p in powers):
        return None
    return sum(
        1 for x in itertools.product(*(range(p) for p in powers))
        if not ideal.contains(x)
    )


def colength_witness(ideal: MonomialIdeal) -> SimplexSpec:
    """The simplex Q_a cut out by the supporting normal at the diagonal.

    Every lattice point of Q_a lies outside the Newton polytope, so its count
    is a lower bound for the colength.
    """
    return SimplexSpec(supporting_normal(ideal).supporting_normal, strict=True)
