"""Replication report serialisation and schema validation."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from lct_certify import __version__
from lct_certify.models import CheckStatus

SCHEMA_PATH = Path(__file__).parent / "report.schema.json"

_TYPES = {
    "object": dict,
    "array": list,
    "string": str,
    "integer": int,
    "boolean": bool,
}


@dataclass(frozen=True)
class ReplicationCheck:
    id: str
    description: str
    context: str
    computed: str
    expected: str
    status: CheckStatus
    annotation: str = ""

    @property
    def paper_location(self) -> str:
        return self.context

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "context": self.context,
            "paper_location": self.context,
            "computed": self.computed,
            "expected": self.expected,
            "status": self.status.value,
            "annotation": self.annotation,
        }


def build_report(checks: list[ReplicationCheck]) -> dict:
    counts = {status: 0 for status in CheckStatus}
    for check in checks:
        counts[check.status] += 1
    return {
        "version": __version__,
        "checks": [c.to_dict() for c in sorted(checks, key=lambda c: c.id)],
        "summary": {
            "pass": counts[CheckStatus.PASS],
            "fail": counts[CheckStatus.FAIL],
            "not_reproduced": counts[CheckStatus.NOT_REPRODUCED],
        },
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def write_report(report: dict, path: Path) -> Path:
    path = Path(path)
    path.write_text(dump_report(report), encoding="utf-8")
    return path


def load_schema() -> dict:
    return json.loads(SCHEMA_PATH.read_text())


def _validate(value, schema: dict, where: str, errors: list[str]) -> None:
    """Walk ``value`` against the schema subset the report uses.

    Supported keywords: type (object, array, string, integer, boolean), enum,
    required, properties, additionalProperties (false only) and items.
    Anything else in the schema is ignored.
    """
    expected = schema.get("type")
    if expected:
        py_type = _TYPES[expected]
        if not isinstance(value, py_type) or (expected == "integer" and isinstance(value, bool)):
            errors.append(f"{where}: expected {expected}")
            return
    if "enum" in schema and value not in schema["enum"]:
        errors.append(f"{where}: {value!r} not in {schema['enum']}")
    if isinstance(value, dict):
        props = schema.get("properties", {})
        for key in schema.get("required", []):
            if key not in value:
                errors.append(f"{where}: missing {key!r}")
        for key, sub in value.items():
            if key in props:
                _validate(sub, props[key], f"{where}.{key}", errors)
            elif schema.get("additionalProperties") is False:
                errors.append(f"{where}: unexpected key {key!r}")
    if isinstance(value, list) and "items" in schema:
        for i, item in enumerate(value):
            _validate(item, schema["items"], f"{where}[{i}]", errors)


def validate_report(report: dict, schema: dict | None = None) -> list[str]:
    """Problems found against the shipped schema; empty when valid."""
    errors: list[str] = []
    _validate(report, schema or load_schema(), "$", errors)
    return errors
