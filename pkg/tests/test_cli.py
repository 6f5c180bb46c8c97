import json
import subprocess
import sys

import pytest

from prelie_graphs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "2", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert "G2,2;v1:L->b1,R->b2;v2:L->b1,R->b2 |Aut|=2" in lines


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "1", "3", "--class", "constant", "--json")
    records = json.loads(out)
    assert code == 0 and len(records) == 3
    assert all(r["schema"] == 1 and r["class"] == "constant" and r["aut"] == 1 for r in records)


def test_aut(capsys):
    assert run(capsys, "aut", "G0,2;")[:2] == (0, "1\n")
    assert run(capsys, "aut", "b1^2")[:2] == (0, "2\n")


def test_compose_four_terms(capsys):
    code, out, _ = run(capsys, "compose", "G2,2;v1:L->b1,R->b2;v2:L->b1,R->b2", "G0,2;")
    assert code == 0
    terms = dict(line.split("\t")[::-1] for line in out.splitlines())
    assert sorted(terms.values()) == ["-1", "-2", "1", "2"]


def test_compose_json(capsys):
    code, out, _ = run(capsys, "compose", "b1", "b1", "--json")
    records = json.loads(out)
    assert code == 0
    assert [r["graph"] for r in records] == sorted(r["graph"] for r in records)
    assert all(r["class"] == "linear" for r in records)


def test_insert(capsys):
    code, out, _ = run(capsys, "insert", "b1", "1", "b1")
    assert code == 0 and len(out.splitlines()) == 3
    assert run(capsys, "insert", "b1", "4", "b1")[0] == 2


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "--side", "right", "c2")
    assert code == 0
    assert out.splitlines() == ["alpha: G0,2;", "quotient: G2,2;v1:L->b1,R->b2;v2:L->b2,R->v1"]
    assert run(capsys, "factor", "--side", "left", "b1")[0] == 2


def test_verify_exit_codes(capsys, tmp_path):
    path = tmp_path / "mc.json"
    code, out, _ = run(capsys, "verify", "mc", "--max-order", "1", "--json", str(path))
    assert code == 0 and "verified" in out
    records = json.loads(path.read_text())
    assert [r["order"] for r in records] == [0, 1]
    assert all(r["class"] == "linear" and r["schema"] == 1 for r in records)
    assert run(capsys, "verify", "mc", "--max-order", "2")[0] == 1
    assert run(capsys, "verify", "mc", "--max-order", "2", "--unsigned")[0] == 0
    assert run(capsys, "verify", "mc", "--max-order", "2", "--class", "constant")[0] == 0


def test_verify_uf_writes_violations(capsys, tmp_path):
    path = tmp_path / "uf.json"
    assert run(capsys, "verify", "uf", "--max-order", "3", "--json", str(path))[0] == 0
    assert json.loads(path.read_text())["violations"] == []


def test_verify_coeff(capsys):
    assert run(capsys, "verify", "coeff", "--max-order", "3", "--unsigned")[0] == 0
    code, out, _ = run(capsys, "verify", "coeff", "--max-order", "2")
    assert code == 1 and "left/right mismatches: 1" in out


def test_table(capsys):
    code, out, _ = run(capsys, "table", "g23")
    assert "15 classes" in out and "DIFFERS FROM the 9" in out
    assert code == 1
    assert run(capsys, "table", "g23", "--unsigned")[0] == 0
    code, out, _ = run(capsys, "table", "g23", "--json")
    data = json.loads(out)
    assert len(data["rows"]) == 9 and data["census"]["count"] == 15


def test_constcase(capsys):
    code, out, _ = run(capsys, "constcase", "2", "1", "2")
    assert code == 0 and "closed_form: 0" in out
    assert run(capsys, "constcase", "0", "0", "0")[0] == 2


@pytest.mark.parametrize(
    "argv, message",
    [
        (["aut", "G1,2;v1:L->b1,R->x"], "parse error"),
        (["aut", "G1,2;v1:L->b9,R->b1"], "invalid graph"),
        (["compose", "G1,2;v1:L->b1,R->b1", "b0"], "invalid graph"),
        (["aut", "nonsense"], "unknown graph name"),
    ],
)
def test_input_errors(capsys, argv, message):
    code, _, err = run(capsys, *argv)
    assert code == 2 and message in err


def test_usage_errors(capsys):
    assert main(["bogus"]) == 2
    assert main([]) == 2
    capsys.readouterr()


def test_resource_guard(capsys, monkeypatch):
    monkeypatch.setenv("PRELIE_MAX_NODES", "1")
    code, _, err = run(capsys, "enumerate", "2", "2")
    assert code == 2 and "PRELIE_MAX_NODES" in err


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "prelie_graphs", "enumerate", "3", "3"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second and first
