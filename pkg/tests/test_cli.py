import json

import pytest

from rainbowrc.cli import main
from rainbowrc.coloring import color_cycle

C6 = "6 6;0 1;1 2;2 3;3 4;4 5;5 0"
THETA = "5 6;0 2;2 1;1 3;3 0;0 4;4 1"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_color_json(capsys):
    code, out, _ = run(capsys, "color", "--graph", C6)
    assert code == 0
    data = json.loads(out)
    assert data["coloring"]["colors"] == 3
    assert data["report"]["rainbow_connected"] is True
    assert data["trace"]["route"] == "hamiltonian"


def test_color_from_file_text(tmp_path, capsys):
    path = tmp_path / "theta.txt"
    path.write_text("# theta graph\n" + THETA.replace(";", "\n") + "\n")
    code, out, _ = run(capsys, "color", str(path), "--format", "text")
    assert code == 0
    assert out.startswith("n=5 K=3 bound=3")


def test_color_dot(capsys):
    code, out, _ = run(capsys, "color", "--graph", THETA, "--dot")
    assert code == 0
    assert out.startswith("graph G {") and out.count(" -- ") == 6


def test_color_rejects_separable(capsys):
    code, _, err = run(capsys, "color", "--graph", "3 2;0 1;1 2")
    assert code == 2 and "NotTwoConnected" in err


@pytest.mark.parametrize("text, name", [
    ("3;0 1", "MalformedHeader"),
    ("3 1;0 x", "MalformedEdge"),
    ("3 1;0 5", "VertexOutOfRange"),
    ("3 2;0 1;1 0", "DuplicateEdge"),
    ("3 1;1 1", "LoopEdge"),
])
def test_parse_errors_exit_2(capsys, text, name):
    code, _, err = run(capsys, "color", "--graph", text)
    assert code == 2 and name in err


def test_missing_file_and_bad_budget(capsys, tmp_path):
    assert run(capsys, "color", str(tmp_path / "nope.txt"))[0] == 2
    assert run(capsys, "color", "--graph", C6, "--budget", "0")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_verify(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(color_cycle(6).to_json(6))
    code, out, _ = run(capsys, "verify", "--graph", C6, "--coloring", str(good))
    assert code == 0
    assert json.loads(out)["exceptional_pairs"] == [[0, 3], [1, 4], [2, 5]]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 6, "colors": 1,
                               "edges": [[i, (i + 1) % 6, 1] for i in range(6)]}))
    code, out, _ = run(capsys, "verify", "--graph", C6, "--coloring", str(bad))
    assert code == 1 and json.loads(out)["rainbow_connected"] is False


def test_exact(capsys):
    code, out, _ = run(capsys, "exact", "--graph", C6)
    assert code == 0 and json.loads(out)["rc"] == 3
    code, out, _ = run(capsys, "exact", "--graph", C6, "--budget", "2")
    assert code == 3 and json.loads(out)["rc"] == "unknown"
    # below the diameter the request is infeasible; at the diameter of C7 it is only inconclusive
    assert run(capsys, "exact", "--graph", C6, "--max-colors", "2")[0] == 2
    c7 = "7 7;" + ";".join(f"{i} {(i + 1) % 7}" for i in range(7))
    code, out, _ = run(capsys, "exact", "--graph", c7, "--max-colors", "3")
    assert code == 3 and json.loads(out)["rc"] == "unknown"


def test_gen_enumerate(capsys):
    code, out, _ = run(capsys, "gen", "--mode", "enumerate", "--max-n", "5")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 10
    assert all(r["n"] == 5 for r in lines)


def test_gen_random_is_seeded(capsys):
    argv = ("gen", "--mode", "random", "--max-n", "9", "--count", "3", "--seed", "4")
    first = run(capsys, *argv)[1]
    assert first == run(capsys, *argv)[1] and len(first.splitlines()) == 3


def test_scan_k2(capsys):
    code, out, err = run(capsys, "scan", "--k", "2", "--max-n", "6")
    assert code == 0
    records = [json.loads(x) for x in out.splitlines()]
    assert len(records) == 70 and all(r["ok"] for r in records)
    assert "0 violations" in err


def test_scan_rejects_bad_k(capsys):
    assert run(capsys, "scan", "--k", "0", "--max-n", "5")[0] == 2
