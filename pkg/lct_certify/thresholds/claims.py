"""Published dimension claims, stored as data and re-evaluated on demand."""

from __future__ import annotations

from dataclasses import dataclass

from lct_certify.errors import NoneFoundError
from lct_certify.models import Cert, ClaimStatus, ThresholdKind
from lct_certify.thresholds.search import ThresholdQuery, min_n


@dataclass(frozen=True)
class DimensionClaim:
    id: str
    which: ThresholdKind
    r: int
    claim_n: int
    cert: Cert
    m: int = 1
    description: str = ""


CLAIMS: tuple[DimensionClaim, ...] = (
    DimensionClaim("lct-cpi-r2-n4", ThresholdKind.LCT_CPI, 2, 4, Cert.CUBE,
                   description="lct bound for codimension-2 complete intersections from dimension 4"),
    *(
        DimensionClaim(f"lct-cpi-6r-r{r}", ThresholdKind.LCT_CPI, r, 6 * r, Cert.VOLUME,
                       description=f"lct bound holds for n >= 6r at r={r}")
        for r in (1, 2, 3)
    ),
    *(
        DimensionClaim(f"superrigid-10r-r{r}", ThresholdKind.SUPERRIGID, r, 10 * r, Cert.VOLUME,
                       description=f"superrigidity inequality holds for n >= 10r at r={r}")
        for r in (1, 2, 3)
    ),
    DimensionClaim("superrigid-r2-n12", ThresholdKind.SUPERRIGID, 2, 12, Cert.VOLUME,
                   description="codimension 2: n >= 12 is enough"),
    DimensionClaim("conditional-r1-m2", ThresholdKind.CONDITIONAL, 1, 36, Cert.BLOCK, m=2,
                   description="index 2 hypersurfaces: N(1,2) = 36"),
    DimensionClaim("conditional-r1-m4", ThresholdKind.CONDITIONAL, 1, 200, Cert.BLOCK, m=4,
                   description="index 4 hypersurfaces: N(1,4) = 200"),
)


@dataclass(frozen=True)
class ClaimResult:
    claim: DimensionClaim
    status: ClaimStatus
    minimal_n: int | None
    limit: int


def evaluate_claim(claim: DimensionClaim, limit: int | None = None, workers: int = 4) -> ClaimResult:
    """VERIFIED when the claimed n is the minimum, VALID_NOT_MINIMAL when it
    passes with a passing tail above a smaller minimum, NOT_REPRODUCED otherwise."""
    limit = limit or claim.claim_n + 20
    query = ThresholdQuery(claim.r, claim.m, claim.cert)
    try:
        report = min_n(query, claim.which, limit, workers)
    except NoneFoundError:
        return ClaimResult(claim, ClaimStatus.NOT_REPRODUCED, None, limit)
    tail_ok = all(row.passed for row in report.table if row.n >= claim.claim_n)
    if not report.passes(claim.claim_n) or not tail_ok:
        status = ClaimStatus.NOT_REPRODUCED
    elif report.minimal_n == claim.claim_n:
        status = ClaimStatus.VERIFIED
    else:
        status = ClaimStatus.VALID_NOT_MINIMAL
    return ClaimResult(claim, status, report.minimal_n, limit)


def evaluate_claims(workers: int = 4) -> list[ClaimResult]:
    return [evaluate_claim(claim, workers=workers) for claim in CLAIMS]


def minimal_by_certificate(which: ThresholdKind, r: int, limit: int, m: int = 1) -> dict[Cert, int | None]:
    """Minimal n under every single certificate, None when nothing passes."""
    out: dict[Cert, int | None] = {}
    for cert in (Cert.VOLUME, Cert.CUBE, Cert.PICK2D):
        try:
            out[cert] = min_n(ThresholdQuery(r, m, cert), which, limit).minimal_n
        except NoneFoundError:
            out[cert] = None
    return out
