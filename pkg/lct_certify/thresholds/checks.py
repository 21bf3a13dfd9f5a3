"""Single-dimension threshold checks.

Each check compares a section count with a certified lower bound for a
closed sigma (or, in the conditional case, for sigma at lam = 1/m).  Rows
carry both sides exactly so tables can be printed and re-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from lct_certify.arith import binomial, compare_pow2_fractional, power_of_two
from lct_certify.errors import MethodInapplicableError
from lct_certify.lattice import sigma_lower_bound
from lct_certify.models import Cert, Ordering, SigmaMethod, ThresholdKind

_SINGLE = {
    Cert.VOLUME: SigmaMethod.VOLUME,
    Cert.CUBE: SigmaMethod.CUBE,
    Cert.PICK2D: SigmaMethod.PICK2D,
}
_BEST_ORDER = (Cert.VOLUME, Cert.CUBE, Cert.PICK2D)


@dataclass(frozen=True)
class TableRow:
    n: int
    lhs: int
    rhs: Fraction | None
    passed: bool
    cert: Cert | None = None
    note: str = ""


def _against_closed_sigma(n: int, lhs: int, dim: int, cert: Cert, allow_equal: bool) -> TableRow:
    """Compare ``lhs`` with the closed sigma_{dim,1} bound chosen by ``cert``."""
    if cert == Cert.BEST:
        rows = []
        for single in _BEST_ORDER:
            try:
                rows.append(_against_closed_sigma(n, lhs, dim, single, allow_equal))
            except MethodInapplicableError:
                continue
        passing = [r for r in rows if r.passed]
        if passing:
            return passing[0]
        strongest = max(rows, key=lambda r: r.rhs)
        return TableRow(n, lhs, strongest.rhs, False, strongest.cert)
    if cert not in _SINGLE:
        raise MethodInapplicableError(cert.value, "only VOLUME, CUBE, PICK2D or BEST bound the closed sigma at lambda = 1")
    bound = sigma_lower_bound(dim, 1, False, _SINGLE[cert])
    passed = lhs < bound.value or (allow_equal and bound.bound_strict and lhs <= bound.value)
    return TableRow(n, lhs, bound.value, passed, cert)


def lct_cpi_row(n: int, r: int, cert: Cert) -> TableRow:
    if not n > r >= 1:
        raise ValueError("need n > r >= 1")
    return _against_closed_sigma(n, binomial(n + r, r - 1), n - r + 1, cert, allow_equal=True)


def superrigidity_row(n: int, r: int, cert: Cert) -> TableRow:
    if not (r >= 1 and n > 2 * r - 1):
        raise ValueError("need r >= 1 and n > 2r - 1")
    return _against_closed_sigma(n, binomial(n + r + 1, 2 * r), n - 2 * r + 1, cert, allow_equal=False)


def check_lct_cpi(n: int, r: int, cert: Cert) -> bool:
    """binom(n+r, r-1) below the closed sigma_{n-r+1,1} bound of ``cert``."""
    return lct_cpi_row(n, r, cert).passed


def check_superrigidity_dim(n: int, r: int, cert: Cert) -> bool:
    """binom(n+r+1, 2r) strictly below the closed sigma_{n-2r+1,1} bound of ``cert``."""
    return superrigidity_row(n, r, cert).passed


def conditional_lhs(n: int, r: int, m: int) -> int:
    return binomial(n + m + r, m * r + m + r - 1)


def check_conditional(n: int, r: int, m: int) -> bool:
    """binom^m <= 2^(n-m), decided on integers."""
    if min(n, r, m) < 1:
        raise ValueError("n, r and m must be positive")
    lhs = conditional_lhs(n, r, m)
    if lhs == 0:
        return True
    return compare_pow2_fractional(lhs, n - m, m) != Ordering.GREATER


@dataclass(frozen=True)
class ConditionalVerdicts:
    integral: bool
    real_exponent: bool
    block_floor: bool

    @property
    def agree(self) -> bool:
        return self.integral == self.real_exponent == self.block_floor


def conditional_verdicts(n: int, r: int, m: int) -> ConditionalVerdicts:
    """The certified verdict next to binom < 2^(n/m - 1) and binom < 2^floor(n/m)."""
    lhs = conditional_lhs(n, r, m)
    if lhs == 0:
        return ConditionalVerdicts(True, True, True)
    return ConditionalVerdicts(
        integral=check_conditional(n, r, m),
        real_exponent=compare_pow2_fractional(lhs, n - m, m) == Ordering.LESS,
        block_floor=lhs < 2 ** (n // m),
    )


def conditional_row(n: int, r: int, m: int) -> TableRow:
    lhs = conditional_lhs(n, r, m)
    verdicts = conditional_verdicts(n, r, m)
    note = "" if verdicts.agree else (
        f"real-exponent={verdicts.real_exponent} block-floor={verdicts.block_floor}"
    )
    # rhs of the integral form, as the m-th root would not be rational
    return TableRow(n, lhs ** m, power_of_two(n - m), verdicts.integral, Cert.BLOCK, note)


def evaluate_row(which: ThresholdKind, n: int, r: int, m: int, cert: Cert) -> TableRow:
    """One table row; inapplicable certificates give a failing row with a note."""
    try:
        if which == ThresholdKind.LCT_CPI:
            return lct_cpi_row(n, r, cert)
        if which == ThresholdKind.SUPERRIGID:
            return superrigidity_row(n, r, cert)
        return conditional_row(n, r, m)
    except MethodInapplicableError as exc:
        return TableRow(n, 0, None, False, cert, exc.reason)


def domain_start(which: ThresholdKind, r: int, m: int) -> int:
    """First dimension where the inequality is meaningful."""
    if which == ThresholdKind.LCT_CPI:
        return r + 1
    if which == ThresholdKind.SUPERRIGID:
        return 2 * r
    return m * r
