"""Replication suite, sigma cache and report serialisation."""

from __future__ import annotations

from lct_certify.replication.cache import SigmaCache, SigmaCacheEntry, cache_key
from lct_certify.replication.report import (
    ReplicationCheck,
    build_report,
    dump_report,
    load_schema,
    validate_report,
    write_report,
)
from lct_certify.replication.suite import Outcome, registered_checks, replicate_all, replication_check, run_check

__all__ = [
    "Outcome",
    "ReplicationCheck",
    "SigmaCache",
    "SigmaCacheEntry",
    "build_report",
    "cache_key",
    "dump_report",
    "load_schema",
    "registered_checks",
    "replicate_all",
    "replication_check",
    "run_check",
    "validate_report",
    "write_report",
]
