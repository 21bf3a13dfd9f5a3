"""Minimal admissible dimensions with full pass/fail tables."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from lct_certify.arith import format_rational
from lct_certify.errors import NoneFoundError
from lct_certify.models import Cert, ThresholdKind
from lct_certify.thresholds.checks import TableRow, domain_start, evaluate_row

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThresholdQuery:
    r: int
    m: int = 1
    cert: Cert = Cert.BEST

    def __post_init__(self):
        if self.r < 1 or self.m < 1:
            raise ValueError("r and m must be positive")


@dataclass
class ThresholdReport:
    query: ThresholdQuery
    which: ThresholdKind
    limit: int
    minimal_n: int | None
    table: list[TableRow] = field(default_factory=list)
    violations: list[int] = field(default_factory=list)

    @property
    def monotone_tail(self) -> bool:
        return not self.violations

    def row(self, n: int) -> TableRow | None:
        return next((row for row in self.table if row.n == n), None)

    def passes(self, n: int) -> bool:
        row = self.row(n)
        return row is not None and row.passed

    def to_dict(self) -> dict:
        return {
            "which": self.which.value,
            "r": self.query.r,
            "m": self.query.m,
            "cert": self.query.cert.value,
            "limit": self.limit,
            "minimal_n": self.minimal_n,
            "monotone_tail": self.monotone_tail,
            "violations": self.violations,
            "table": [
                {
                    "n": row.n,
                    "lhs": str(row.lhs),
                    "rhs": None if row.rhs is None else format_rational(row.rhs),
                    "pass": row.passed,
                    "cert": row.cert.value if row.cert else None,
                    "note": row.note,
                }
                for row in self.table
            ],
        }


def min_n(query: ThresholdQuery, which: ThresholdKind, limit: int, workers: int = 4) -> ThresholdReport:
    """Smallest n <= limit passing the check; raises NoneFoundError otherwise."""
    if limit < 1:
        raise ValueError("limit must be positive")
    start = domain_start(which, query.r, query.m)
    dims = list(range(start, limit + 1))

    def evaluate(n: int) -> TableRow:
        return evaluate_row(which, n, query.r, query.m, query.cert)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        rows = dict(zip(dims, pool.map(evaluate, dims)))
    table = [rows[n] for n in dims]

    minimal = next((row.n for row in table if row.passed), None)
    report = ThresholdReport(query, which, limit, minimal, table)
    if minimal is None:
        raise NoneFoundError(limit, report)
    report.violations = [row.n for row in table if row.n > minimal and not row.passed]
    if report.violations:
        logger.warning(
            "%s r=%d m=%d %s: non-monotone tail at %s",
            which.value, query.r, query.m, query.cert.value, report.violations,
        )
    return report


def conditional_N(r: int, m: int, limit: int, workers: int = 4) -> ThresholdReport:
    return min_n(ThresholdQuery(r, m, Cert.BLOCK), ThresholdKind.CONDITIONAL, limit, workers)
