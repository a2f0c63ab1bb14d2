import json
import subprocess
import sys

import pytest

from clawdom.cli import main


@pytest.fixture
def c4(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_bytes(b"4 4\n0 1\n1 2\n2 3\n0 3\n")
    return p


@pytest.fixture
def claw(tmp_path):
    p = tmp_path / "claw.txt"
    p.write_bytes(b"4 3\n0 1\n0 2\n0 3\n")
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve(capsys, c4):
    code, out, _ = run(capsys, "solve", c4)
    assert code == 0 and json.loads(out)["gamma"] == 2


def test_solve_class_violation(capsys, claw):
    code, _, err = run(capsys, "solve", claw)
    assert code == 2 and "claw" in err


def test_solve_fallback(capsys, claw):
    code, out, _ = run(capsys, "solve", "--fallback-exact", claw)
    assert code == 0 and json.loads(out)["branch_trace"] == ["exact-fallback"]


def test_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"3 2\n0 5\n")
    code, _, err = run(capsys, "solve", bad)
    assert code == 3 and "line 2" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "solve", tmp_path / "nope.txt")
    assert code == 3


def test_oracle(capsys, c4):
    code, out, _ = run(capsys, "oracle", c4)
    assert json.loads(out)["gamma"] == 2
    code, out, _ = run(capsys, "oracle", "--cap", "1", c4)
    assert json.loads(out)["found"] is False


def test_verify(capsys, c4, claw):
    assert run(capsys, "verify", c4)[0] == 0
    code, out, _ = run(capsys, "verify", claw)
    assert code == 2 and json.loads(out)["claw_free"] is False


def test_gen_then_solve(capsys, tmp_path):
    out = tmp_path / "g.col"
    man = tmp_path / "g.json"
    code, _, _ = run(capsys, "gen", "--family", "c6p8", "--q", "2", "--seed", "3",
                     "--format", "dimacs", "--out", out, "--manifest", man)
    assert code == 0 and out.read_bytes().startswith(b"p edge")
    assert json.loads(man.read_bytes())["expected_branch"] == "C6"
    code, sol, _ = run(capsys, "solve", "--small-cutoff", "0", out)
    assert code == 0 and json.loads(sol)["gamma"] == 4


def test_gen_is_deterministic(capsys):
    a = run(capsys, "gen", "--family", "line_graph", "--n", "20", "--seed", "9")[1]
    b = run(capsys, "gen", "--family", "line_graph", "--n", "20", "--seed", "9")[1]
    assert a == b and a.startswith("20 ")


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--families", "line_graph", "--sizes", "12,60",
                       "--seed", "0")
    rows = json.loads(out)["rows"]
    assert code == 0 and [r["oracle_s"] == "skipped" for r in rows] == [False, True]


def test_bench_unknown_family():
    with pytest.raises(SystemExit):
        main(["bench", "--families", "nope", "--sizes", "10"])


def test_stdin_and_entry_point(c4):
    res = subprocess.run([sys.executable, "-m", "clawdom.cli", "solve", "-"],
                         input=c4.read_bytes(), capture_output=True)
    assert res.returncode == 0 and json.loads(res.stdout)["gamma"] == 2
