import csv
import io
import json
import subprocess
import sys

import pytest

from hecke_a2.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_classpoly_example():
    code, out, _ = call("classpoly", "t[1,0].s1.tau^0", "--mode", "split", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"O1": [1], "O2": [0, 1]}


def test_classify_example():
    code, out, _ = call("classify", "t[1,-1].e.tau^0", "--mode", "split")
    assert (code, out.strip()) == (0, "O_lam[1,2]")


def test_points_example():
    code, out, _ = call("points", "t[0,0].e.tau^1", "--group", "pgl3", "--b", "tau", "--q", "5")
    assert (code, out.strip()) == (0, "3")


@pytest.mark.parametrize("argv", [
    ["classify", "t[1,0].s7.tau^0"],
    ["classpoly", "t[0,0].e.tau^1", "--mode", "split"],
    ["classify", "t[0,0].e.tau^0", "--mode", "split", "--group", "u3"],
    ["classify", "t[0,0].e.tau^0", "--q", "3"],
    ["points", "t[0,0].e.tau^1", "--b", "1", "--q", "5"],
    ["points", "t[0,0].e.tau^1", "--b", "tau"],
    ["adlv", "t[0,0].e.tau^0", "--group", "sl2"],
    ["adlv", "t[0,0].e.tau^0", "--mode", "split"],
    ["ghkr", "t[0,0].s1.tau^0", "--b", "O_lam[1,1]"],
    ["leading", "1,3"],
    ["leading", "x"],
    ["verify", "nosuch"],
    ["verify", "points", "--max-length", "-1"],
    ["cache", "info"],
    ["nosuch"],
    [],
])
def test_usage_errors(argv, monkeypatch):
    monkeypatch.delenv("HECKE_CACHE", raising=False)
    code, out, err = call(*argv)
    assert code == 1
    assert out == ""
    assert err


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    assert "classpoly" in capsys.readouterr().out


def test_verify_success_and_failure():
    code, out, _ = call("verify", "closedform", "--max-length", "8")
    assert code == 0 and "0 failures" in out
    code, out, _ = call("verify", "ghkr", "--max-length", "10", "--margin", "0", "--format", "json")
    rep = json.loads(out)
    assert code == 2 and rep["failures"]
    assert all(f["command"].startswith("hecke-a2 ghkr ") for f in rep["failures"])


def test_verify_reports_errata():
    code, out, _ = call("verify", "dims", "--max-length", "5", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["failures"] == [] and rep["errata"]


def _csv(text):
    return list(csv.reader(io.StringIO(text)))


def test_csv_and_json_agree():
    args = ["classpoly", "t[2,1].s121.tau^0", "--mode", "twisted"]
    data = json.loads(call(*args, "--format", "json")[1])
    rows = _csv(call(*args, "--format", "csv")[1])
    assert rows[0] == ["class", "coefficients"]
    assert {r[0]: [int(x) for x in r[1].split()] for r in rows[1:]} == data

    args = ["adlv", "t[2,1].s1.tau^0", "--group", "pgl3"]
    records = json.loads(call(*args, "--format", "json")[1])
    rows = _csv(call(*args, "--format", "csv")[1])
    header = rows[0]
    for rec, row in zip(records, rows[1:], strict=True):
        assert [("" if rec[k] is None else str(rec[k])) for k in header] == row

    args = ["sweep", "--mode", "split_tau", "--max-length", "4"]
    records = json.loads(call(*args, "--format", "json")[1])
    rows = _csv(call(*args, "--format", "csv")[1])
    assert [[r["element"], str(r["length"]), r["class"], json.dumps(r["poly"], separators=(",", ":"))]
            for r in records] == rows[1:]


def test_sweep_order_and_determinism():
    args = ["sweep", "--mode", "twisted", "--max-length", "5", "--format", "json"]
    first, second = call(*args), call(*args)
    assert first == second
    records = json.loads(first[1])
    keys = [(r["length"], r["element"]) for r in records]
    assert keys == sorted(keys)
    seeded = json.loads(call(*args, "--seed", "7")[1])
    assert seeded == records


def test_adlv_sweep():
    code, out, _ = call("sweep", "--group", "u3", "--b", "1", "--max-length", "3", "--format", "json")
    assert code == 0
    assert all(r["group"] == "u3" and r["b"] == "O0d" for r in json.loads(out))


def test_leading_and_ghkr_output():
    code, out, _ = call("leading", "2,2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["N0"] == 3
    assert {r["b"]: r["leading"] for r in data["rows"]}["O_lam[1,2]"] == 1
    code, out, _ = call("ghkr", "t[5,5].s1.tau^0", "--b", "O_lam[1,1]", "--format", "json")
    assert code == 0 and json.loads(out)["holds"] is True


def test_cache_commands(tmp_path, monkeypatch):
    path = str(tmp_path / "memo.jsonl")
    code, out, _ = call("cache", "warm", "--max-length", "6", "--cache-file", path, "--format", "json")
    assert code == 0 and json.loads(out)["entries"] > 0
    monkeypatch.setenv("HECKE_CACHE", path)
    code, out, _ = call("cache", "info", "--format", "json")
    assert json.loads(out)["version"] == 1
    assert call("classpoly", "t[1,0].s1.tau^0")[1] == "O1: 1\nO2: u\n"
    # sweeps write through
    call("sweep", "--mode", "split", "--max-length", "8")
    assert json.loads(call("cache", "info", "--format", "json")[1])["entries"] > 0
    with open(path, "w") as fh:
        fh.write(json.dumps({"format": "hecke-memo", "version": 0}) + "\n")
    code, _, err = call("classpoly", "t[1,0].s1.tau^0")
    assert code == 1 and "version" in err
    code, out, _ = call("cache", "clear")
    assert code == 0 and "removed" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hecke_a2", "classify", "t[0,0].s121.tau^0",
                           "--mode", "twisted"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "O3d"
