"""Sufficiency reductions behind the linear dimension bounds.

The inequalities 2^(a-1) >= e(a+1) for a >= 6 and 2^a >= (e^2/4)(a+3)^2 for
a >= 9 are checked on integers with certified enclosures of e and e^2, and
the bounds n = 6r and n = 10r are re-checked directly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from lct_certify.arith import decide_at_least, e_enclosure
from lct_certify.errors import InconclusivePrecisionError
from lct_certify.models import Cert, Verdict
from lct_certify.thresholds.checks import check_lct_cpi, check_superrigidity_dim

logger = logging.getLogger(__name__)


@dataclass
class ReductionReport:
    digits: int
    exponential: dict[str, dict[int, bool]] = field(default_factory=dict)
    direct: dict[str, dict[int, bool]] = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return all(
            all(results.values())
            for group in (self.exponential, self.direct)
            for results in group.values()
        )


def _decide(lhs: int, interval, label: str, a: int) -> bool:
    verdict = decide_at_least(lhs, interval)
    if verdict == Verdict.INCONCLUSIVE:
        raise InconclusivePrecisionError(f"{label} at a={a} is undecided at this precision")
    return verdict == Verdict.TRUE


def verify_sufficiency_reductions(r_max: int, a_max: int, digits: int = 20) -> ReductionReport:
    if r_max < 1 or a_max < 1:
        raise ValueError("r_max and a_max must be positive")
    e1 = e_enclosure(1, digits)
    e2 = e_enclosure(2, digits)
    report = ReductionReport(digits)

    report.exponential["2^(a-1) >= e(a+1)"] = {
        a: _decide(2 ** (a - 1), e1.scale(a + 1), "2^(a-1) >= e(a+1)", a)
        for a in range(6, a_max + 1)
    }
    report.exponential["2^a >= (e^2/4)(a+3)^2"] = {
        a: _decide(2**a, e2.scale(Fraction((a + 3) ** 2, 4)), "2^a >= (e^2/4)(a+3)^2", a)
        for a in range(9, a_max + 1)
    }
    report.direct["lct-cpi at n=6r"] = {
        r: check_lct_cpi(6 * r, r, Cert.VOLUME) for r in range(1, r_max + 1)
    }
    report.direct["superrigid at n=10r"] = {
        r: check_superrigidity_dim(10 * r, r, Cert.VOLUME) for r in range(1, r_max + 1)
    }
    logger.info("sufficiency reductions up to a=%d r=%d: %s", a_max, r_max, report.all_pass)
    return report
