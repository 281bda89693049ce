"""Task runner, report persistence, golden comparisons, exit codes."""

import json
import subprocess
import sys

import pytest

from cealg.cli import main
from cealg.dgca import Report
from cealg.reporting import (
    GoldenReport,
    LedgerMismatch,
    TaskConfig,
    UnknownTask,
    compare_golden,
    load_golden,
    run_task,
    write_report,
)


def test_unknown_task():
    with pytest.raises(UnknownTask):
        run_task("not.a.task")


def test_ledger_hash_guard():
    with pytest.raises(LedgerMismatch):
        TaskConfig("hopf.pushout", ledger_hash="0" * 64)


def test_run_cheap_tasks():
    assert run_task("hopf.pushout").ok
    assert run_task("s4.d2").ok
    assert run_task("mink3.d2").ok
    assert run_task("mu3.closure").ok
    assert run_task("derham.d2", max_dim=4).ok
    assert run_task("s4.cohomology", max_degree=12).pinned["dims"] == \
        [1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]


def test_long_gating():
    rep = run_task("iso.trace7")
    assert rep.verdict == "capped"
    rep = run_task("family", alpha=1, beta=1)
    assert rep.verdict == "capped"
    assert "--long" in rep.details


def test_write_report_and_json_shape(tmp_path):
    rep = run_task("hopf.pushout")
    path = write_report(rep, tmp_path)
    data = json.loads(path.read_text())
    assert data["task_id"] == "hopf.pushout"
    assert data["verdict"] == "pass"
    assert "ledger_hash" in data and "engine_version" in data


def test_compare_golden_pass_fail_and_mismatch():
    rep = run_task("s4.cohomology")
    golden = load_golden("s4.cohomology")
    assert golden is not None
    assert compare_golden(rep, golden).ok

    tweaked = GoldenReport(rep.task_id, rep.verdict,
                           {"dims": [0] * 13}, golden.ledger_hash)
    cmp = compare_golden(rep, tweaked)
    assert not cmp.ok and "dims" in cmp.details

    alien = GoldenReport(rep.task_id, rep.verdict, dict(golden.pinned),
                         ledger_hash="f" * 64)
    with pytest.raises(LedgerMismatch):
        compare_golden(rep, alien)

    with pytest.raises(UnknownTask):
        compare_golden(Report("other.task", "pass"), golden)


def test_cli_main_inprocess(tmp_path, capsys):
    assert main(["--task", "hopf.pushout", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "hopf.pushout: pass" in out

    assert main(["--task", "iso.trace7", "--no-write"]) == 2
    assert main(["--task", "definitely.not.a.task", "--no-write"]) == 2
    assert main(["--list-tasks"]) == 0
    listing = capsys.readouterr().out
    assert "m5.relation" in listing

    code = main(["--task", "s4.cohomology", "--json", "--no-write"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["pinned"]["dims"][4] == 1

    assert main(["--task", "s4.cohomology", "--check-golden",
                 "--out", str(tmp_path)]) == 0


def test_cli_subprocess_smoke(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "cealg.cli", "--task", "hopf.pushout",
         "--out", str(tmp_path), "--json"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["verdict"] == "pass"


def test_reports_are_deterministic():
    a = run_task("s4.cohomology")
    b = run_task("s4.cohomology")
    assert a.pinned == b.pinned
    c1 = run_task("mu3.closure").pinned
    c2 = run_task("mu3.closure").pinned
    assert c1 == c2
