"""Run suites of checks, collect verdicts, write and replay reports."""
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .checks import EXACT, ORACLE, Check, suite_checks
from .oracle import NotEqual, SpecConfig, equal_skew, replay_witness

PASS, PROBABLY, FAIL, ERROR = "Pass", "ProbablyPass", "Fail", "Error"
VERDICTS = (PASS, PROBABLY, FAIL, ERROR)

# desk-scale bounds, overridable with allow_large
MAX_N, MAX_M = 6, 4


class SuiteSpec:
    def __init__(self, suite, ns=None, ms=None, config=None, workers=1, allow_large=False):
        self.suite = suite
        self.ns = tuple(ns) if ns else None
        self.ms = tuple(ms) if ms else None
        self.config = config or SpecConfig()
        self.workers = max(1, int(workers))
        if not allow_large:
            if self.ns and max(self.ns) > MAX_N:
                raise ValueError("n > %d needs allow_large" % MAX_N)
            if self.ms and max(self.ms) > MAX_M:
                raise ValueError("m > %d needs allow_large" % MAX_M)
        if self.ns and min(self.ns) < 3:
            raise ValueError("suites need n >= 3")

    @property
    def seed(self):
        return self.config.seed

    def checks(self):
        return suite_checks(self.suite, self.ns, self.ms)

    def to_dict(self):
        return {"suite": self.suite, "n": list(self.ns) if self.ns else None,
                "m": list(self.ms) if self.ms else None}


class CheckReport:
    def __init__(self, check_id, anchor, kind, name, params, verdict,
                 witness=None, detail=None, wall_time=0.0):
        if verdict not in VERDICTS:
            raise ValueError("unknown verdict %r" % verdict)
        self.check_id = check_id
        self.anchor = anchor
        self.kind = kind
        self.name = name
        self.params = params
        self.verdict = verdict
        self.witness = witness
        self.detail = detail
        self.wall_time = wall_time

    @property
    def failed(self):
        return self.verdict in (FAIL, ERROR)

    def to_dict(self, timing=False):
        d = {"id": self.check_id, "anchor": self.anchor, "kind": self.kind, "name": self.name,
             "params": self.params, "verdict": self.verdict}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail is not None:
            d["detail"] = self.detail
        if timing:
            d["wall_time"] = round(self.wall_time, 4)
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d["id"], d["anchor"], d["kind"], d["name"], d.get("params", {}), d["verdict"],
                   d.get("witness"), d.get("detail"), d.get("wall_time", 0.0))

    def __repr__(self):
        return "CheckReport(%s: %s)" % (self.check_id, self.verdict)


def _jsonable(x):
    """Witnesses may carry tuples and other labels; keep them readable."""
    return json.loads(json.dumps(x, default=repr))


def run_check(check, config):
    t0 = time.perf_counter()
    rng = random.Random("%d:%s" % (config.seed, check.check_id))
    witness = detail = None
    try:
        if check.kind == "exact":
            ok, w = EXACT[check.name](check.params)
            verdict = PASS if ok else FAIL
            witness = None if ok else _jsonable(w if w is not None else {})
        else:
            pairs, torus = ORACLE[check.name](check.params)
            res = equal_skew(pairs, torus, config, rng)
            if isinstance(res, NotEqual):
                verdict, witness = FAIL, _jsonable(res.witness)
            else:
                verdict = PROBABLY
                detail = {"pairs": len(pairs), "trials": res.trials, "orders": list(res.orders)}
    except Exception as exc:  # reported per check, never aborts the suite
        verdict, witness = ERROR, {"error": type(exc).__name__, "message": str(exc)[:500]}
    return CheckReport(check.check_id, check.anchor, check.kind, check.name, check.params,
                       verdict, witness, detail, time.perf_counter() - t0)


def _run_one(args):
    check, config = args
    return run_check(check, config)


def run_suite(spec, checks=None):
    """Run every check of the spec; reports come back sorted by check id."""
    checks = spec.checks() if checks is None else checks
    jobs = [(c, spec.config) for c in checks]
    if spec.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            reports = list(pool.map(_run_one, jobs))
    else:
        reports = [_run_one(j) for j in jobs]
    return sorted(reports, key=lambda r: r.check_id)


def summarize(reports):
    counts = {v: 0 for v in VERDICTS}
    for r in reports:
        counts[r.verdict] += 1
    return counts


def exit_code(reports):
    return 1 if any(r.failed for r in reports) else 0


def report_dict(reports, spec, timing=False):
    return {
        "artifact": "clusterr",
        "version": __version__,
        "seed": spec.seed,
        "config": spec.config.to_dict(),
        "spec": spec.to_dict(),
        "summary": summarize(reports),
        "checks": [r.to_dict(timing) for r in reports],
    }


def emit_report(reports, fmt, spec, timing=False):
    """Serialize reports as json or text; returns bytes."""
    if fmt == "json":
        body = json.dumps(report_dict(reports, spec, timing), indent=2, sort_keys=True)
        return (body + "\n").encode()
    if fmt != "text":
        raise ValueError("format must be json or text")
    counts = summarize(reports)
    lines = ["clusterr %s  suite=%s  seed=%d  orders=%s  trials=%d  prime_bits=%d" % (
        __version__, spec.suite, spec.seed, ",".join(map(str, spec.config.root_orders)),
        spec.config.trials, spec.config.prime_bits)]
    width = max([len(r.check_id) for r in reports] + [10])
    for r in reports:
        line = "%-12s %-*s  %s" % (r.verdict, width, r.check_id, r.anchor)
        if timing:
            line += "  (%.2fs)" % r.wall_time
        lines.append(line)
        if r.witness is not None:
            lines.append("    witness: " + json.dumps(r.witness, sort_keys=True))
    lines.append("total %d: " % len(reports) + ", ".join("%s %d" % (v, counts[v]) for v in VERDICTS))
    return ("\n".join(lines) + "\n").encode()


def load_report(data):
    if isinstance(data, bytes):
        data = data.decode()
    d = json.loads(data)
    if "checks" not in d:
        # a single check record
        d = {"config": d.get("config", SpecConfig().to_dict()), "checks": [d]}
    d["reports"] = [CheckReport.from_dict(c) for c in d["checks"]]
    return d


def replay(data):
    """Re-run every Fail in a saved report.  Oracle failures are replayed
    from the recorded assignment; exact failures are recomputed.  Returns a
    list of (check id, reproduced)."""
    d = load_report(data)
    config = SpecConfig.from_dict(d.get("config") or {})
    out = []
    for r in d["reports"]:
        if r.verdict != FAIL:
            continue
        if r.kind == "oracle":
            pairs, torus = ORACLE[r.name](r.params)
            out.append((r.check_id, replay_witness(pairs, torus, r.witness)))
        else:
            again = run_check(Check(r.check_id, r.anchor, r.kind, r.name, r.params), config)
            out.append((r.check_id, again.verdict == FAIL))
    return out
