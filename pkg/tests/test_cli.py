import json
import subprocess
import sys

import pytest

from ferrers.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_info(capsys):
    assert run(capsys, "info", "--shape", "6,5,5,2")[:2] == (0, "m=4 n=6 conjugate=4,4,3,3,3,1 edges=18")
    assert run(capsys, "info", "--shape", "1")[:2] == (0, "m=1 n=1 conjugate=1 edges=1")
    code, _, err = run(capsys, "info", "--shape", "3,4")
    assert code == 1 and "weakly decreasing" in err


def test_info_json_matches_plain(capsys):
    _, plain, _ = run(capsys, "info", "--shape", "6,5,5,2")
    _, out, _ = run(capsys, "info", "--shape", "6,5,5,2", "--json")
    doc = json.loads(out)
    assert doc["shape"] == [6, 5, 5, 2] and doc["method"] == "info"
    res = doc["result"]
    assert plain == f"m={res['m']} n={res['n']} conjugate={','.join(map(str, res['conjugate']))} edges={res['edges']}"


def test_count(capsys):
    code, out, _ = run(capsys, "count", "spanning", "--shape", "6,5,5,2", "--all-methods")
    assert code == 0
    assert out.splitlines() == ["formula 5400", "enumerate 5400", "kirchhoff 5400"]
    assert run(capsys, "count", "hamiltonian", "--shape", "5,4,4,3,2")[:2] == (0, "64")
    assert run(capsys, "count", "hamiltonian", "--shape", "5,4,4,3,2", "--method", "formula")[:2] == (0, "64")
    assert run(capsys, "count", "spanning", "--shape", "2,2")[:2] == (0, "4")
    assert run(capsys, "count", "rooks", "--shape", "5,4,4,3,2")[:2] == (0, "8")


def test_count_json(capsys):
    _, out, _ = run(capsys, "count", "spanning", "--shape", "2,2", "--method", "kirchhoff", "--json")
    assert json.loads(out) == {"shape": [2, 2], "result": 4, "method": "kirchhoff"}


@pytest.mark.parametrize(
    "argv",
    [
        ("count", "rooks", "--shape", "3,2"),
        ("count", "hamiltonian", "--shape", "2,2,1"),
        ("count", "rooks", "--shape", "2,2", "--method", "kirchhoff"),
    ],
)
def test_count_rejections(capsys, argv):
    assert main(list(argv)) == 1


@pytest.mark.parametrize("argv", [("count", "spanning"), ("bogus",), ()])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    assert exc.value.code == 1


def test_convert(capsys):
    code, out, _ = run(capsys, "convert", "path-to-rooks", "--shape", "5,4,4,3,2",
                       "--path", "r5 c2 r4 c3 r2 c1 r3 c4 r1 c5")
    assert code == 0
    assert out.splitlines() == ["A=5,1;4,2;2,3;3,4;1,5", "B=5,2;4,3;2,1;3,4;1,5"]

    code, out, _ = run(capsys, "convert", "rooks-to-path", "--shape", "5,4,4,3,2",
                       "--a", "5,1;4,2;2,3;3,4;1,5", "--b", "5,2;4,3;2,1;3,4;1,5")
    assert (code, out) == (0, "r5 c2 r4 c3 r2 c1 r3 c4 r1 c5")

    code, out, _ = run(capsys, "convert", "config-to-tree", "--shape", "6,5,5,2",
                       "--config", "R=2,3;3,2;4,2;C=1,4;2,3;4,2;3,5;1,6")
    assert (code, out) == (0, "1,3;1,4;1,6;2,2;2,3;3,2;3,5;4,1;4,2")

    code, out, _ = run(capsys, "convert", "tree-to-config", "--shape", "6,5,5,2", "--tree", out)
    assert code == 0
    code, again, _ = run(capsys, "convert", "config-to-tree", "--shape", "6,5,5,2", "--config", out)
    assert again == "1,3;1,4;1,6;2,2;2,3;3,2;3,5;4,1;4,2"

    assert run(capsys, "convert", "rooks-to-path", "--shape", "1", "--a", "1,1", "--b", "1,1")[:2] == (0, "r1 c1")


def test_convert_json(capsys):
    _, out, _ = run(capsys, "convert", "path-to-rooks", "--shape", "1", "--path", "r1 c1", "--json")
    assert json.loads(out) == {"shape": [1], "result": {"A": "1,1", "B": "1,1"}, "method": "path-to-rooks"}


def test_convert_invalid_objects(capsys):
    code, _, err = run(capsys, "convert", "path-to-rooks", "--shape", "2,2", "--path", "r1 c1 r1 c2")
    assert code == 1 and "twice" in err
    code, _, err = run(capsys, "convert", "rooks-to-path", "--shape", "2,2", "--a", "1,1;2,1", "--b", "1,1;2,2")
    assert code == 1 and "column 1" in err
    code, _, err = run(capsys, "convert", "config-to-tree", "--shape", "2,2")
    assert code == 1 and "--config" in err


def test_weight(capsys):
    code, out, _ = run(capsys, "weight", "--shape", "2,2", "--x", "1,2", "--y", "3,4", "--all-methods")
    assert code == 0 and out.splitlines() == ["formula 504", "kirchhoff 504", "enumerate 504"]
    assert run(capsys, "weight", "--shape", "1", "--x", "7", "--y", "3")[:2] == (0, "21")
    assert run(capsys, "weight", "--shape", "6,5,5,2", "--x", "1,1,1,1", "--y", "1,1,1,1,1,1")[:2] == (0, "5400")
    assert run(capsys, "weight", "--shape", "2,2", "--x", "1", "--y", "3,4")[0] == 1


def test_weight_json_all_methods(capsys):
    _, out, _ = run(capsys, "weight", "--shape", "2,2", "--x", "1,2", "--y", "3,4", "--all-methods", "--json")
    doc = json.loads(out)
    assert doc["result"] == 504 and doc["methods"] == {"formula": 504, "kirchhoff": 504, "enumerate": 504}


def test_method_disagreement_exits_2(capsys, monkeypatch):
    from ferrers import spanning

    monkeypatch.setattr(spanning, "count_spanning_trees_formula", lambda d: 1)
    code, _, err = run(capsys, "count", "spanning", "--shape", "2,2", "--all-methods")
    assert code == 2 and "disagree" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-cells", "1")
    assert code == 0 and out.endswith("PASS")
    code, out, _ = run(capsys, "verify", "--max-cells", "6", "--seed", "3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["result"]["passed"] is True
    assert run(capsys, "verify", "--max-cells", "0")[0] == 1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ferrers.cli", "count", "spanning", "--shape", "6,5,5,2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "5400"
