"""Append-only JSON Lines cache of sigma witnesses."""

from __future__ import annotations

import json
import logging
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from lct_certify import __version__
from lct_certify.arith import format_rational
from lct_certify.lattice import SigmaResult, verify_witness, witness_from_record, witness_to_record

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SigmaCacheEntry:
    n: int
    lam: Fraction
    strict: bool
    result: SigmaResult
    tool_version: str
    timestamp: str

    @property
    def key(self) -> tuple[int, str, bool]:
        return cache_key(self.n, self.lam, self.strict)


def cache_key(n: int, lam, strict: bool) -> tuple[int, str, bool]:
    return n, format_rational(Fraction(lam)), bool(strict)


class SigmaCache:
    """Later entries for a key shadow earlier ones; every hit is recounted."""

    def __init__(self, path: Path):
        self.path = Path(path)
        self._lock = threading.Lock()

    def _read(self) -> list[dict]:
        records = []
        try:
            if not self.path.exists():
                return []
            for lineno, line in enumerate(self.path.read_text().splitlines(), 1):
                if not line.strip():
                    continue
                try:
                    records.append(json.loads(line))
                except json.JSONDecodeError:
                    logger.warning("%s:%d: unreadable cache line skipped", self.path, lineno)
        except OSError as exc:
            logger.warning("cannot read cache %s: %s", self.path, exc)
        return records

    def get(self, n: int, lam, strict: bool) -> SigmaResult | None:
        wanted = cache_key(n, lam, strict)
        with self._lock:
            records = self._read()
        for record in reversed(records):
            if (record.get("n"), record.get("lambda"), record.get("strict")) != wanted:
                continue
            try:
                result = witness_from_record(record["result"])
            except (KeyError, ValueError, TypeError):
                logger.warning("malformed cache entry for %s", wanted)
                continue
            if verify_witness(result):
                return result
            logger.warning("cache entry for %s failed re-verification, ignoring it", wanted)
        return None

    def put(self, result: SigmaResult) -> SigmaCacheEntry:
        entry = SigmaCacheEntry(
            result.n, result.lam, result.strict, result, __version__,
            datetime.now(timezone.utc).isoformat(timespec="seconds"),
        )
        record = {
            "n": entry.n,
            "lambda": format_rational(entry.lam),
            "strict": entry.strict,
            "result": witness_to_record(result),
            "tool_version": entry.tool_version,
            "timestamp": entry.timestamp,
        }
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(record, sort_keys=True) + "\n")
        return entry
