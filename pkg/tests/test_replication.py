"""Tests for the sigma cache and the replication report."""

import json
from dataclasses import replace
from fractions import Fraction

import pytest

from lct_certify.lattice import SigmaResult, sigma_exact_2d, witness_to_record
from lct_certify.models import CACHE_ENV, PRECISION_ENV, CertifyConfig, CheckStatus, Exactness
from lct_certify.replication import (
    Outcome,
    SigmaCache,
    build_report,
    dump_report,
    registered_checks,
    replicate_all,
    replication_check,
    run_check,
    validate_report,
    write_report,
)
from lct_certify.replication import suite

FAST_CHECKS = [
    "gamma-mult-surd",
    "k3-h0-9H",
    "k3-case1-certificate",
    "line-selfint-s-bound",
    "pick-sigma-2-11-closed",
    "pick-sigma-2-11-strict",
    "sigma-exact-2d",
]


def _make_config(tmp_path, **kwargs):
    return CertifyConfig(cache_path=tmp_path / "sigma.jsonl", workers=2, **kwargs)


def _tampered_line(result):
    bad = replace(result, value=result.value + 1)
    record = {"n": 2, "lambda": "1/1", "strict": True, "result": witness_to_record(bad)}
    return json.dumps(record) + "\n"


class TestSigmaCache:
    def test_round_trip(self, tmp_path):
        cache = SigmaCache(tmp_path / "sigma.jsonl")
        result = sigma_exact_2d(1, True)
        entry = cache.put(result)
        assert entry.key == (2, "1/1", True)
        assert cache.get(2, 1, True) == result
        assert cache.get(2, 1, False) is None

    def test_missing_file(self, tmp_path):
        assert SigmaCache(tmp_path / "absent.jsonl").get(2, 1, True) is None

    def test_unreadable_line_is_skipped(self, tmp_path):
        path = tmp_path / "sigma.jsonl"
        cache = SigmaCache(path)
        result = sigma_exact_2d(2, False)
        cache.put(result)
        with path.open("a") as fh:
            fh.write("{not json\n")
        assert cache.get(2, 2, False) == result

    def test_tampered_entry_is_ignored(self, tmp_path):
        path = tmp_path / "sigma.jsonl"
        cache = SigmaCache(path)
        result = sigma_exact_2d(1, True)
        path.write_text(_tampered_line(result))
        assert cache.get(2, 1, True) is None
        cache.put(result)
        with path.open("a") as fh:
            fh.write(_tampered_line(result))
        assert cache.get(2, 1, True) == result

    def test_flipped_mask_is_ignored(self, tmp_path):
        path = tmp_path / "sigma.jsonl"
        half = (Fraction(1, 2), Fraction(1, 2))
        flipped = SigmaResult(2, Fraction(1), True, 5, half, [(1, 1)], [(0, 2), (2, 0)], Exactness.EXACT, 5)
        record = {"n": 2, "lambda": "1/1", "strict": True, "result": witness_to_record(flipped)}
        path.write_text(json.dumps(record) + "\n")
        assert SigmaCache(path).get(2, 1, True) is None

    def test_lines_are_sorted_json(self, tmp_path):
        path = tmp_path / "sigma.jsonl"
        SigmaCache(path).put(sigma_exact_2d(1, False))
        record = json.loads(path.read_text().splitlines()[0])
        assert record["lambda"] == "1/1"
        assert "tool_version" in record


class TestConfig:
    def test_environment_fallbacks(self, monkeypatch, tmp_path):
        monkeypatch.setenv(CACHE_ENV, str(tmp_path / "env.jsonl"))
        monkeypatch.setenv(PRECISION_ENV, "35")
        config = CertifyConfig()
        assert config.cache_path == tmp_path / "env.jsonl"
        assert config.precision == 35

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv(CACHE_ENV, raising=False)
        monkeypatch.delenv(PRECISION_ENV, raising=False)
        config = CertifyConfig()
        assert config.cache_path is None
        assert config.precision == 20


class TestReplicationSuite:
    def test_registry(self):
        ids = registered_checks()
        assert ids == sorted(ids)
        assert set(FAST_CHECKS) <= set(ids)
        assert "superrigid-r2-volume-min-n" in ids

    def test_duplicate_id_rejected(self):
        with pytest.raises(ValueError):
            replication_check("k3-h0-9H", "again", "")(lambda config: Outcome(1, 1, True))

    def test_fast_checks_pass(self, tmp_path):
        checks = replicate_all(_make_config(tmp_path), only=FAST_CHECKS)
        assert [c.id for c in checks] == sorted(FAST_CHECKS)
        assert all(c.status == CheckStatus.PASS for c in checks), [c for c in checks if c.status != CheckStatus.PASS]
        by_id = {c.id: c for c in checks}
        assert by_id["k3-h0-9H"].computed == "245"
        assert by_id["pick-sigma-2-11-closed"].computed == "253"
        assert by_id["pick-sigma-2-11-strict"].computed == "260"

    def test_codimension_two_not_reproduced(self, tmp_path):
        check = run_check("superrigid-r2-volume-min-n", _make_config(tmp_path))
        assert check.status == CheckStatus.NOT_REPRODUCED
        assert check.computed == "13"
        assert check.expected == "12"
        assert "VOLUME=13" in check.annotation
        assert "CUBE=15" in check.annotation

    def test_index_two_claim_is_valid_but_not_minimal(self, tmp_path):
        check = run_check("N12-minimal", _make_config(tmp_path))
        assert check.status == CheckStatus.PASS
        assert (check.computed, check.expected) == ("35", "36")
        assert check.annotation.startswith("minimal=35")

    @pytest.mark.parametrize("r,minimum", [(1, 7), (2, 13), (3, 19)])
    def test_volume_minima_are_pinned(self, tmp_path, r, minimum):
        check = run_check(f"superrigid-min-n-r{r}", _make_config(tmp_path))
        assert check.status == CheckStatus.PASS
        assert (check.computed, check.expected) == (str(minimum), str(minimum))
        assert check.annotation.endswith("holds: True")

    def test_raising_check_becomes_failure(self, monkeypatch, tmp_path):
        def broken(config):
            raise RuntimeError("boom")

        monkeypatch.setitem(suite._REGISTRY, "zz-broken", suite._Registered("zz-broken", "broken", "", broken))
        check = run_check("zz-broken", _make_config(tmp_path))
        assert check.status == CheckStatus.FAIL
        assert check.computed == "error: boom"

    def test_rational_rendering(self, monkeypatch, tmp_path):
        monkeypatch.setitem(
            suite._REGISTRY,
            "zz-half",
            suite._Registered("zz-half", "half", "", lambda config: Outcome(Fraction(1, 2), Fraction(4, 2), False)),
        )
        check = run_check("zz-half", _make_config(tmp_path))
        assert (check.computed, check.expected) == ("1/2", "2")
        assert check.status == CheckStatus.FAIL


class TestReport:
    def test_report_validates_and_is_stable(self, tmp_path):
        checks = replicate_all(_make_config(tmp_path), only=FAST_CHECKS[:3])
        report = build_report(checks)
        assert validate_report(report) == []
        assert report["summary"] == {"pass": 3, "fail": 0, "not_reproduced": 0}
        again = build_report(list(reversed(checks)))
        assert dump_report(report) == dump_report(again)
        path = write_report(report, tmp_path / "report.json")
        assert json.loads(path.read_text()) == report
        assert path.read_text().endswith("}\n")

    def test_location_is_emitted_under_both_names(self, tmp_path):
        check = run_check("k3-h0-9H", _make_config(tmp_path))
        record = check.to_dict()
        assert record["paper_location"] == record["context"] == check.paper_location
        report = build_report([check])
        assert validate_report(report) == []
        del report["checks"][0]["paper_location"]
        assert any("missing 'paper_location'" in e for e in validate_report(report))

    def test_report_bytes_are_stable_across_runs(self, tmp_path):
        first = replicate_all(CertifyConfig(cache_path=tmp_path / "a.jsonl", workers=1), only=FAST_CHECKS)
        second = replicate_all(CertifyConfig(cache_path=tmp_path / "b.jsonl", workers=4), only=FAST_CHECKS)
        one = write_report(build_report(first), tmp_path / "one.json").read_bytes()
        two = write_report(build_report(second), tmp_path / "two.json").read_bytes()
        assert one == two

    def test_schema_catches_problems(self):
        report = {"version": "0", "checks": [{"id": "x"}], "summary": {"pass": True}, "extra": 1}
        errors = validate_report(report)
        assert any("extra" in e for e in errors)
        assert any("missing 'status'" in e for e in errors)
        assert any("summary.pass" in e for e in errors)

    def test_summary_counts(self, monkeypatch, tmp_path):
        monkeypatch.setitem(
            suite._REGISTRY,
            "zz-fail",
            suite._Registered("zz-fail", "fails", "", lambda config: Outcome(1, 2, False)),
        )
        checks = replicate_all(_make_config(tmp_path), only=["zz-fail", "k3-h0-9H", "superrigid-r2-volume-min-n"])
        summary = build_report(checks)["summary"]
        assert summary == {"pass": 1, "fail": 1, "not_reproduced": 1}
