import json

import pytest

from catalan_tasep.cli import run
from catalan_tasep.closedforms import q_table, z_n
from catalan_tasep.reference import QQ, canonical


def call(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


def test_prob_symbolic(capsys):
    code, out = call(capsys, "prob", "--state", "010110011", "--symbolic")
    assert code == 0
    assert out.splitlines()[1] == f"Z_9: {z_n(9).format()}"


def test_prob_numeric_json(capsys):
    code, out = call(capsys, "prob", "--state", "11", "--alpha", "1/2", "--beta", "1/3", "--json")
    assert code == 0 and json.loads(out)["probability"] == "3/8"


def test_table_is_character_exact(capsys):
    code, out = call(capsys, "table", "--n", "8", "--spec", "qq")
    assert code == 0
    assert out.splitlines() == [f"8\t{k}\t{canonical(QQ[8][k])}" for k in range(1, 8)]
    call(capsys, "table", "--n", "5", "--spec", "1q")


def test_other_verbs(capsys):
    assert call(capsys, "narayana-count", "--n", "4", "--k", "2")[1].strip() == "20"
    assert call(capsys, "narayana-count", "--shape", "6,4,4,2,0/9")[1].strip() == "127"
    assert call(capsys, "genfun", "--shape", "1/1")[1].strip() == "a^2*b + a*b^2"
    assert call(capsys, "prob-locations", "--n", "2", "--sites", "1")[1].strip() == "a + b"
    assert call(capsys, "prob-k", "--n", "2", "--k", "1", "--alpha", "1", "--beta", "1")[0] == 0
    assert call(capsys, "partition-function", "--n", "3", "--alpha", "1", "--beta", "1")[1].endswith("value: 14\n")
    code, out = call(capsys, "solve", "--n", "2", "--alpha", "1/2", "--beta", "1/3", "--json")
    assert json.loads(out)["pi"]["00"] == "1/6"
    code, out = call(capsys, "simulate", "--n", "2", "--alpha", "1", "--beta", "1", "--horizon", "1000", "--json")
    assert code == 0 and "tv_distance" in json.loads(out)


def test_outputs_are_repeatable(capsys):
    argv = ["simulate", "--n", "3", "--alpha", "1", "--beta", "2", "--horizon", "5000", "--seed", "3"]
    assert call(capsys, *argv) == call(capsys, *argv)


def test_verify(capsys):
    code, out = call(capsys, "verify", "--max-semiperimeter", "6")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_verify_failure_exit(capsys, monkeypatch):
    from catalan_tasep import verify
    monkeypatch.setattr(verify, "suite", lambda s: [("broken", lambda: (False, "forced"))])
    code, out = call(capsys, "verify")
    assert code == 1 and out.startswith("FAIL  broken")


@pytest.mark.parametrize("argv", [
    ["prob", "--bogus"],
    ["prob"],
    ["table", "--n", "4", "--spec", "qx"],
    ["solve", "--n", "2", "--alpha", "x", "--beta", "1"],
    ["solve", "--n", "12", "--alpha", "1", "--beta", "1"],
    ["simulate", "--n", "2", "--alpha", "1", "--beta", "1", "--horizon", "0"],
    ["prob", "--state", "0120"],
    ["genfun", "--shape", "2,3/3"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as info:
        run(argv)
    assert info.value.code == 2
    assert capsys.readouterr().err


def test_table_matches_library(capsys):
    _, out = call(capsys, "table", "--n", "6", "--spec", "q1")
    assert [l.split("\t")[2] for l in out.splitlines()] == [r.format() for r in q_table(6, "q1")]
