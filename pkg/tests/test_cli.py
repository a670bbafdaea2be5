import json
import subprocess
import sys

import pytest

from clusterr.cli import main, read_config


def run(tmp_path, *argv):
    out = tmp_path / "out.txt"
    code = main(list(argv) + ["--out", str(out)])
    return code, out.read_text() if out.exists() else ""


def test_verify_exact_suite_exits_zero(tmp_path):
    code, text = run(tmp_path, "verify", "qtorus-exact", "--n", "3", "--m", "3")
    assert code == 0
    assert text.splitlines()[-1].startswith("total 4:")


def test_verify_empty_json(tmp_path):
    code, text = run(tmp_path, "verify", "empty", "--format", "json")
    assert code == 0
    assert json.loads(text)["checks"] == []


def test_selftest_exits_one_and_replays(tmp_path):
    report = tmp_path / "self.json"
    assert main(["verify", "selftest", "--format", "json", "--trials", "2", "--out", str(report)]) == 1
    code, text = run(tmp_path, "replay", str(report))
    assert code == 1
    assert text.strip() == "reproduced st.false-identity"


def test_replay_without_failures(tmp_path):
    report = tmp_path / "ok.json"
    assert main(["verify", "empty", "--format", "json", "--out", str(report)]) == 0
    code, text = run(tmp_path, "replay", str(report))
    assert code == 0 and "no failing checks" in text


def test_replay_missing_file(tmp_path):
    assert main(["replay", str(tmp_path / "missing.json")]) == 2


def test_unknown_suite_is_usage_error(tmp_path):
    assert main(["verify", "no-such-suite"]) == 2


def test_bad_flags_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2
    assert main(["verify", "lens", "--n", "x"]) == 2


def test_size_bounds(tmp_path):
    assert main(["compute", "quiver", "--n", "7", "--m", "2"]) == 2
    assert main(["compute", "quiver", "--n", "2", "--m", "2"]) == 2
    code, _ = run(tmp_path, "compute", "quiver", "--n", "7", "--m", "1", "--allow-large")
    assert code == 0


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# small run\nn = 3\nm = 3\nroot-orders = 5,7\ntrials = 2\nformat = json\n")
    assert read_config(str(cfg))["root_orders"] == "5,7"
    code, text = run(tmp_path, "verify", "qtorus-exact", "--config", str(cfg))
    assert code == 0
    d = json.loads(text)
    assert d["config"]["root_orders"] == [5, 7] and d["spec"]["n"] == [3]


def test_command_line_beats_config(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("format = json\n")
    code, text = run(tmp_path, "verify", "empty", "--config", str(cfg), "--format", "text")
    assert code == 0 and text.startswith("clusterr ")


def test_bad_config_key(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("colour = blue\n")
    assert main(["verify", "empty", "--config", str(cfg)]) == 2


def test_compute_loop_e(tmp_path):
    code, text = run(tmp_path, "compute", "loop-e", "--n", "3", "--m", "4", "--k", "4")
    assert code == 0 and text.strip()


@pytest.mark.parametrize("obj,extra", [
    ("loop-schur", []),
    ("cylindric", ["--s", "1", "--columns", "1:2,1:1"]),
    ("R-image", []),
    ("tilde-R", []),
    ("y-R", []),
    ("quantum-R", []),
    ("geometric-R", []),
    ("quiver", []),
])
def test_compute_objects(tmp_path, obj, extra):
    code, text = run(tmp_path, "compute", obj, "--n", "3", "--m", "3", *extra)
    assert code == 0 and text.strip()


def test_compute_R_image_text(tmp_path):
    code, text = run(tmp_path, "compute", "R-image", "--n", "3", "--m", "2", "--cycle", "1")
    assert code == 0
    assert [l.split()[0] for l in text.splitlines()] == ["x1.1", "x1.2", "x1.3"]


def test_compute_boundary_cycle_refused():
    assert main(["compute", "R-image", "--n", "3", "--m", "2", "--cycle", "0"]) == 2


def test_cylindric_needs_columns():
    assert main(["compute", "cylindric", "--n", "3", "--m", "3", "--s", "1"]) == 2


def test_figures(tmp_path):
    figs = tmp_path / "figs"
    code, _ = run(tmp_path, "compute", "quiver", "--n", "3", "--m", "2", "--figures", str(figs))
    assert code == 0
    assert (figs / "quiver_n3_m2.png").stat().st_size > 0
    code, _ = run(tmp_path, "verify", "qtorus-exact", "--n", "3", "--m", "3", "--figures", str(figs))
    assert code == 0
    assert (figs / "verdicts.png").exists() and (figs / "timings.png").exists()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "clusterr", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("clusterr ")
    res = subprocess.run([sys.executable, "-m", "clusterr", "verify", "empty"], capture_output=True)
    assert res.returncode == 0 and res.stdout.startswith(b"clusterr ")
