import json
import subprocess
import sys

import pytest

from qcong.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list(capsys):
    code, out, _ = run_cli(capsys, "list")
    assert code == 0
    assert "thm1" in out
    assert "Gasper-Rahman quadratic summation" in out
    assert len(out.strip().splitlines()) >= 20


def test_verify_exit_codes(capsys):
    assert run_cli(capsys, "verify", "--claim", "thm1", "--n", "7")[0] == 0
    assert run_cli(capsys, "verify", "--claim", "thm1", "--n", "4")[0] == 2
    assert run_cli(capsys, "verify", "--claim", "bogus", "--n", "3")[0] == 2
    assert run_cli(capsys, "verify", "--claim", "thm1")[0] == 2
    assert run_cli(capsys, "verify", "--n", "3")[0] == 2


def test_verify_cor1_diagnostic(capsys):
    code, out, _ = run_cli(capsys, "verify", "--claim", "cor1", "--p", "3", "--r", "1")
    assert code == 0
    assert "v_3 = 5 >= 4" in out


def test_verify_mutant(capsys):
    code, out, _ = run_cli(capsys, "verify", "--claim", "thm1", "--n", "7", "--mutant")
    assert code == 0
    assert "FAIL" in out and "detected" in out


def test_verify_json_stdout(capsys):
    code, out, _ = run_cli(capsys, "verify", "--claim", "thm2", "--n", "5", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["verdicts"][0]["pass"] is True
    assert d["summary"] == {"pass": 1, "fail": 0, "inapplicable": 0}


def test_scan_writes_reports(capsys, tmp_path):
    js, md = tmp_path / "out.json", tmp_path / "out.md"
    code, _, _ = run_cli(capsys, "scan", "--n-max", "9", "--primes", "3,5", "--r-max", "1",
                         "--specializations", "2", "--series-order", "8",
                         "--json", str(js), "--md", str(md))
    assert code == 0
    d = json.loads(js.read_text())
    assert d["summary"]["fail"] == 0
    assert d["config"]["primes"] == [3, 5]
    assert "| claim |" in md.read_text()
    code, _, _ = run_cli(capsys, "scan", "--n-max", "9", "--primes", "3,5", "--r-max", "1",
                         "--specializations", "2", "--series-order", "8", "--json", str(tmp_path / "b.json"))
    a = [{k: v for k, v in x.items() if k != "elapsed_ms"} for x in d["verdicts"]]
    b = [{k: v for k, v in x.items() if k != "elapsed_ms"}
         for x in json.loads((tmp_path / "b.json").read_text())["verdicts"]]
    assert a == b


def test_scan_empty(capsys):
    code, out, _ = run_cli(capsys, "scan", "--n-max", "0")
    assert code == 0
    assert "0 pass, 0 fail, 0 inapplicable" in out


def test_scan_unwritable(capsys, tmp_path):
    code, _, err = run_cli(capsys, "scan", "--n-max", "1", "--json", str(tmp_path / "no" / "x.json"))
    assert code == 2
    assert "cannot write" in err


def test_gr(capsys):
    code, out, _ = run_cli(capsys, "gr", "--order", "12", "--trials", "3")
    assert code == 0
    assert "equal through q^12" in out
    assert run_cli(capsys, "gr", "--order", "0")[0] == 0
    assert run_cli(capsys, "gr", "--order", "-1")[0] == 2


def test_env_and_precedence(capsys, monkeypatch):
    monkeypatch.setenv("QCONG_SEED", "7")
    monkeypatch.setenv("QCONG_SERIES_ORDER", "6")
    _, out, _ = run_cli(capsys, "gr", "--trials", "1", "--format", "json")
    d = json.loads(out)
    assert d["seed"] == 7 and d["config"]["series_order"] == 6
    _, out, _ = run_cli(capsys, "gr", "--trials", "1", "--seed", "9", "--series-order", "4", "--format", "json")
    d = json.loads(out)
    assert d["seed"] == 9 and d["config"]["series_order"] == 4
    monkeypatch.setenv("QCONG_SEED", "x")
    assert run_cli(capsys, "list")[0] == 0
    assert run_cli(capsys, "gr", "--trials", "1")[0] == 2


def test_markdown_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "--claim", "vanhamme", "--p", "13", "--format", "markdown")
    assert code == 0
    assert out.startswith("# qcong report")
    assert "## p-adic" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qcong", "verify", "--claim", "thm1", "--n", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PASS" in proc.stdout
