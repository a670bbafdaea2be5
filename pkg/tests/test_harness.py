import json
from pathlib import Path

import pytest

from clusterr.checks import ALL, SUITES, Check, suite_checks
from clusterr.harness import (ERROR, FAIL, PASS, PROBABLY, CheckReport, SuiteSpec, emit_report,
                              exit_code, load_report, replay, run_check, run_suite)
from clusterr.oracle import SpecConfig

GOLDEN = Path(__file__).parent / "golden" / "ybr_quantum_n3_m3_seed0.json"
FAST = SpecConfig(trials=2, seed=0)


def test_every_suite_builds_checks():
    for name in SUITES:
        checks = suite_checks(name)
        assert checks, name
        ids = [c.check_id for c in checks]
        assert len(ids) == len(set(ids))
    assert "selftest" not in ALL


def test_unknown_suite():
    with pytest.raises(KeyError):
        suite_checks("nope")


def test_empty_suite():
    spec = SuiteSpec("empty", config=FAST)
    reports = run_suite(spec)
    assert reports == [] and exit_code(reports) == 0
    d = json.loads(emit_report(reports, "json", spec))
    assert d["checks"] == [] and d["summary"][PASS] == 0


def test_spec_bounds():
    with pytest.raises(ValueError):
        SuiteSpec("lens", ns=[7])
    with pytest.raises(ValueError):
        SuiteSpec("lens", ms=[5])
    with pytest.raises(ValueError):
        SuiteSpec("lens", ns=[2])
    assert SuiteSpec("lens", ns=[7], allow_large=True).ns == (7,)


def test_selftest_fails_with_replayable_witness():
    spec = SuiteSpec("selftest", config=FAST)
    reports = run_suite(spec)
    (r,) = reports
    assert r.verdict == FAIL and r.witness is not None
    assert exit_code(reports) == 1
    data = emit_report(reports, "json", spec)
    assert replay(data) == [(r.check_id, True)]
    # a single check record replays too
    single = json.dumps(dict(r.to_dict(), config=FAST.to_dict()))
    assert replay(single) == [(r.check_id, True)]


def test_tampered_witness_is_not_reproduced():
    spec = SuiteSpec("selftest", config=FAST)
    d = json.loads(emit_report(run_suite(spec), "json", spec))
    # with zeta = 1 the operators commute, so the discrepancy disappears
    d["checks"][0]["witness"]["assignment"]["zeta"] = 1
    assert replay(json.dumps(d)) == [("st.false-identity", False)]


def test_same_seed_same_bytes():
    spec = SuiteSpec("lens", ns=[3], config=FAST)
    a = emit_report(run_suite(spec), "json", spec)
    b = emit_report(run_suite(spec), "json", spec)
    assert a == b


def test_text_report_has_one_line_per_check():
    spec = SuiteSpec("qtorus-exact", ns=[3], ms=[3], config=FAST)
    reports = run_suite(spec)
    lines = emit_report(reports, "text", spec).decode().splitlines()
    assert lines[0].startswith("clusterr ")
    assert lines[-1].startswith("total %d:" % len(reports))
    body = [l for l in lines[1:-1] if not l.startswith("    ")]
    assert len(body) == len(reports)
    for line, r in zip(body, reports):
        assert line.split()[:2] == [r.verdict, r.check_id]


def test_json_roundtrip():
    spec = SuiteSpec("qtorus-exact", ns=[3], ms=[3], config=FAST)
    reports = run_suite(spec)
    loaded = load_report(emit_report(reports, "json", spec))
    assert [r.to_dict() for r in loaded["reports"]] == [r.to_dict() for r in reports]
    assert SpecConfig.from_dict(loaded["config"]) == FAST


def test_bad_format_rejected():
    spec = SuiteSpec("empty")
    with pytest.raises(ValueError):
        emit_report([], "xml", spec)


def test_error_verdict_does_not_abort():
    bad = Check("x.broken", "broken parameters", "exact", "lax_cleared", {"n": 1})
    r = run_check(bad, FAST)
    assert r.verdict == ERROR and "error" in r.witness
    assert r.failed


def test_unknown_verdict_rejected():
    with pytest.raises(ValueError):
        CheckReport("a", "b", "exact", "c", {}, "Maybe")


def test_golden_report():
    spec = SuiteSpec("ybr-quantum", ns=[3], ms=[3], config=SpecConfig(seed=0))
    reports = run_suite(spec)
    assert all(r.verdict == PROBABLY for r in reports)
    assert emit_report(reports, "json", spec) == GOLDEN.read_bytes()
