"""Command line interface: exit codes, report schema, determinism, budgets."""

import json
import re
import subprocess
import sys

import pytest

from kitealg.cli import main

SWAP_SHAPE = '{"n": 2, "lambda": "id", "rho": "swap"}'


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv + ["--format", "json"])
    return code, json.loads(out), err


def strip_clock(report):
    blob = json.dumps(report, sort_keys=True)
    return re.sub(r'"wall_ms": [0-9.]+', '"wall_ms": 0', blob)


# -- check ------------------------------------------------------------------------


def test_check_axioms_passes_on_twisted_kite(capsys):
    code, report, _ = run_json(capsys, [
        "check", "--group", "z", "--shape", SWAP_SHAPE,
        "--height", "2", "--checks", "axioms"])
    assert code == 0
    verdicts = report["checks"]["axioms"]["verdicts"]
    assert all(v["status"] == "holds" for v in verdicts.values())
    assert {"PEA.i", "PEA.ii", "PEA.iii", "PEA.iv"} <= set(verdicts)
    assert any(key.startswith("PMV.") for key in verdicts)


def test_check_reports_classification_without_failing(capsys):
    code, report, _ = run_json(capsys, [
        "check", "--group", "z", "--shape", SWAP_SHAPE, "--checks", "axioms"])
    assert code == 0
    cls = report["checks"]["axioms"]["extras"]["classification"]
    assert cls["symmetry"]["status"] == "fails"
    assert cls["commutativity"]["status"] == "fails"


def test_check_rdp0_fails_on_strict_cone(capsys):
    code, report, _ = run_json(capsys, [
        "check", "--group", "strictcone2",
        "--shape", '{"n": 1, "lambda": "id", "rho": "id"}',
        "--height", "3", "--cap", "24", "--checks", "rdp0"])
    assert code == 1
    assert report["exit_code"] == 1
    v = report["checks"]["rdp0"]["verdicts"]["rdp0"]
    assert v["status"] == "fails"
    assert v["witness"]


def test_check_full_battery_on_default_fixture(capsys):
    code, report, _ = run_json(capsys, ["check", "--height", "1"])
    assert code == 0
    assert set(report["checks"]) == {"axioms", "rdp0", "ideals", "iso", "state"}


def test_malformed_shape_is_a_usage_error(capsys):
    code, out, err = run(capsys, [
        "check", "--shape", '{"n": 2, "lambda": "nope", "rho": "id"}'])
    assert code == 64
    assert "config error" in err


def test_unknown_check_token_is_a_usage_error(capsys):
    code, _, err = run(capsys, ["check", "--checks", "axioms,wat"])
    assert code == 64
    assert "config error" in err


def test_bad_inline_json_is_a_usage_error(capsys):
    code, _, err = run(capsys, ["check", "--shape", "{oops"])
    assert code == 64
    assert "config error" in err


def test_state_check_answers_on_kite(capsys):
    code, report, _ = run_json(capsys, [
        "check", "--group", "z", "--shape", SWAP_SHAPE,
        "--height", "1", "--checks", "state"])
    assert code == 0
    section = report["checks"]["state"]
    assert section["verdicts"]["unique_state"]["status"] == "holds"
    assert section["verdicts"]["state_kernel_normal"]["status"] == "holds"
    assert section["extras"]["split_sizes"]["e0"] >= 1


def test_report_is_deterministic(capsys):
    argv = ["check", "--group", "z", "--shape", SWAP_SHAPE,
            "--height", "1", "--checks", "axioms,ideals"]
    _, first, _ = run_json(capsys, argv)
    _, second, _ = run_json(capsys, argv)
    assert strip_clock(first) == strip_clock(second)


def test_out_flag_writes_the_json_report(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, [
        "check", "--height", "1", "--checks", "axioms", "--out", str(path)])
    assert code == 0
    on_disk = json.loads(path.read_text())
    assert on_disk["schema"] == "kite-checks/1"
    # stdout stays human-readable while --out captures the full report
    assert "PEA.i" in out


def test_text_format_mentions_classification(capsys):
    code, out, _ = run(capsys, [
        "check", "--group", "z", "--shape", SWAP_SHAPE, "--height", "1",
        "--checks", "axioms"])
    assert code == 0
    assert "(classification)" in out


# -- sweep ------------------------------------------------------------------------


def test_sweep_symmetry_matrix(capsys):
    grid = json.dumps({"groups": ["z"], "n": [2], "heights": [1],
                       "perm_pairs": "all"})
    code, report, _ = run_json(capsys, ["sweep", "--grid", grid,
                                        "--checks", "axioms"])
    assert code == 0
    rows = report["cells"]
    assert len(rows) == 4
    for row in rows:
        sym = row["classification"]["symmetry"]
        assert (sym == "holds") == (row["lam"] == row["rho"])


def test_sweep_empty_grid_is_ok(capsys):
    grid = json.dumps({"groups": [], "n": [1], "heights": [1],
                       "perm_pairs": "all"})
    code, report, _ = run_json(capsys, ["sweep", "--grid", grid])
    assert code == 0
    assert report["cells"] == []


def test_sweep_budget_refusal(capsys):
    grid = json.dumps({"groups": ["z", "z2"], "n": [0, 1, 2, 3, 4],
                       "heights": [1, 2, 3], "perm_pairs": "all"})
    code, _, err = run(capsys, ["sweep", "--grid", grid])
    assert code == 64
    assert "budget" in err


# -- show -------------------------------------------------------------------------


def test_show_prints_tables(capsys):
    code, out, _ = run(capsys, [
        "show", "--group", "z", "--shape", SWAP_SHAPE, "--height", "1"])
    assert code == 0
    assert "carrier" in out
    assert "L(" in out and "U(" in out


def test_show_budget_refusal(capsys):
    code, _, err = run(capsys, [
        "show", "--group", "z",
        "--shape", '{"n": 3, "lambda": "id", "rho": "id"}', "--height", "3"])
    assert code == 64
    assert "budget" in err


# -- wiring -----------------------------------------------------------------------


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "kitealg.cli", "check", "--height", "1",
         "--checks", "axioms", "--format", "json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    json.loads(proc.stdout)
