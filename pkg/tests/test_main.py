import json

import pytest

from symcheck.main import main


def test_expand_schur(capsys):
    assert main(["expand", "schur", "--lambda", "[2,1]", "--n", "2"]) == 0
    assert capsys.readouterr().out.strip() == "x1^2*x2 + x1*x2^2"


def test_expand_q_series(capsys):
    assert main(["expand", "qfn", "--r", "2", "--n", "1"]) == 0
    assert capsys.readouterr().out.strip() == "2*x1^2"
    assert main(["expand", "schur2r", "--lambda", "[2,1]", "--n", "1"]) == 0
    assert capsys.readouterr().out.strip() == "2*x1^3"


def test_expand_json(capsys):
    assert main(["expand", "schur", "--lambda", "[1]", "--n", "2", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "object": "schur",
        "params": {"n": "2", "lambda": "[1]"},
        "value": "x1 + x2",
    }


def test_expand_table_text(capsys):
    assert main(["expand", "invkostka", "--weight", "2", "--n", "2"]) == 0
    assert capsys.readouterr().out.splitlines() == ["index: [2] [1,1]", "[[1,-1],[0,1]]"]


def test_show_block(capsys):
    assert main(["show", "kostka", "--weight", "2", "--n", "2"]) == 0
    block = json.loads(capsys.readouterr().out)
    assert block["index"] == ["[2]", "[1,1]"]
    assert block["entries"] == [["1", "1"], ["0", "1"]]


@pytest.mark.parametrize(
    "argv",
    [
        ["expand", "schur", "--n", "2"],
        ["expand", "schur", "--lambda", "[1,2]", "--n", "2"],
        ["expand", "schur", "--lambda", "[1,1,1]", "--n", "2"],
        ["expand", "schur", "--lambda", "[1]", "--n", "0"],
        ["expand", "kostka", "--n", "2"],
        ["show", "kostka", "--weight", "-1", "--n", "2"],
        ["verify", "--suite", "bogus"],
        ["verify", "--n-max", "0"],
        ["verify", "--workers", "0"],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_verify_text(capsys):
    code = main(["verify", "--suite", "kostka", "--weight-max", "1", "--format", "text", "--quiet"])
    assert code == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    assert "✅ ALL GATING CHECKS PASSED" in out
