"""Shared enums and configuration for lct-certify."""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from pathlib import Path

CACHE_ENV = "LCT_CERTIFY_CACHE"
PRECISION_ENV = "LCT_CERTIFY_PRECISION"


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    @classmethod
    def of(cls, left, right) -> Ordering:
        if left < right:
            return cls.LESS
        if left > right:
            return cls.GREATER
        return cls.EQUAL


class Verdict(enum.Enum):
    """Three-valued answer for decisions made on enclosures."""
    TRUE = "true"
    FALSE = "false"
    INCONCLUSIVE = "inconclusive"


class Exactness(enum.Enum):
    EXACT = "EXACT"
    LOWER_BOUND = "LOWER_BOUND"
    UPPER_BOUND = "UPPER_BOUND"


class Flavor(enum.Enum):
    NON_KLT = "NON_KLT"
    NON_LC = "NON_LC"


class SigmaMethod(enum.Enum):
    PICK2D = "PICK2D"
    CUBE = "CUBE"
    VOLUME = "VOLUME"
    BLOCK = "BLOCK"


class Cert(enum.Enum):
    VOLUME = "VOLUME"
    CUBE = "CUBE"
    PICK2D = "PICK2D"
    BLOCK = "BLOCK"
    BEST = "BEST"


class ThresholdKind(enum.Enum):
    LCT_CPI = "lct-cpi"
    SUPERRIGID = "superrigid"
    CONDITIONAL = "conditional"


class CheckStatus(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_REPRODUCED = "NOT_REPRODUCED"


class ClaimStatus(enum.Enum):
    VERIFIED = "VERIFIED"
    VALID_NOT_MINIMAL = "VALID_NOT_MINIMAL"
    NOT_REPRODUCED = "NOT_REPRODUCED"


@dataclass
class CertifyConfig:
    """Runtime settings shared by the CLI and the replication suite."""
    cache_path: Path | None = None
    precision: int | None = None
    seed: int = 0
    search_budget: int = 20000
    workers: int = 4

    def __post_init__(self):
        if self.cache_path is None:
            env_path = os.getenv(CACHE_ENV, "")
            if env_path:
                self.cache_path = Path(env_path)
        if self.precision is None:
            env_precision = os.getenv(PRECISION_ENV, "")
            self.precision = int(env_precision) if env_precision.isdigit() else 20
