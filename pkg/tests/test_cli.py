import json
import subprocess
import sys

import pytest

from sunitgraph.cli import run


@pytest.fixture
def graph_file(tmp_path):
    def write(n, edges, name="g.json"):
        path = tmp_path / name
        path.write_text(json.dumps({"n": n, "edges": edges}))
        return str(path)

    return write


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None), out


def test_build(capsys):
    code, data, _ = call(capsys, "build", "--primes", "2,3", "--points", "0,1,3")
    assert code == 0 and data == {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}


def test_embed_failure_is_null_with_exit_one(capsys, graph_file):
    k23 = graph_file(5, [[0, 2], [0, 3], [0, 4], [1, 2], [1, 3], [1, 4]])
    code, data, out = call(capsys, "embed", "--graph", k23)
    assert code == 1 and data is None and out.strip() == "null"


def test_embed_success(capsys, graph_file):
    c6 = graph_file(6, [[i, (i + 1) % 6] for i in range(6)])
    code, data, _ = call(capsys, "embed", "--graph", c6, "--max-dim", "4")
    assert code == 0 and data["dim"] == 3


def test_units(capsys):
    code, data, _ = call(capsys, "units", "--primes", "2", "--bound", "8")
    assert code == 0 and len(data) == 3
    assert {tuple(s["values"]) for s in data} == {("-1", "2"), ("1/2", "1/2"), ("2", "-1")}
    code, data, _ = call(capsys, "units", "--primes", "2", "--bound", "1", "--arity", "3")
    assert code == 0 and all("degenerate" in s for s in data)


def test_canon_with_negative_points(capsys):
    code, data, _ = call(capsys, "canon", "--primes", "2", "--points=3,5,9")
    assert data == ["0", "1", "3"]
    code, data, _ = call(capsys, "canon", "--primes", "2,3", "--points=-1,5,2")
    assert data == ["0", "1", "2"]


def test_represent_routes(capsys, graph_file):
    c4 = graph_file(4, [[0, 1], [1, 2], [2, 3], [0, 3]])
    code, data, _ = call(capsys, "represent", "--graph", c4, "--primes", "2,3")
    assert code == 0 and data["primes"] == [2, 3]
    code, data, _ = call(capsys, "represent", "--graph", c4)
    assert code == 0 and data["map"] == [0, 1, 2, 3]
    k3 = graph_file(3, [[0, 1], [1, 2], [0, 2]], "k3.json")
    code, _, _ = call(capsys, "represent", "--graph", k3, "--primes", "2")
    assert code == 1


def test_rescale(capsys, tmp_path):
    rep = tmp_path / "rep.json"
    rep.write_text(json.dumps({
        "primes": [11], "points": ["0", "1", "12", "11"],
        "graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]},
    }))
    code, data, _ = call(capsys, "rescale", "--rep", str(rep), "--primes", "2,3", "--variant", "1")
    assert code == 0 and data["primes"] == [2, 3]


def test_analyze_and_census(capsys, graph_file):
    k4 = graph_file(4, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]])
    code, data, _ = call(capsys, "analyze", "--graph", k4, "--primes", "2,3")
    assert code == 0 and data["status"] == "FINITELY_REPRESENTABLE" and data["citations"]
    c4 = graph_file(4, [[0, 1], [1, 2], [2, 3], [0, 3]], "c4.json")
    code, data, _ = call(capsys, "census", "--graph", c4, "--primes", "2,3", "--limit", "20")
    assert code == 0 and data["count"] == len(data["classes"]) >= 2


def test_search(capsys, graph_file):
    k3 = graph_file(3, [[0, 1], [1, 2], [0, 2]])
    code, data, _ = call(capsys, "search", "--graph", k3, "--primes", "2", "--limit", "8")
    assert code == 0 and data["points"] == ["0", "1", "2"]
    code, data, _ = call(capsys, "search", "--graph", k3, "--primes", "3", "--limit", "20")
    assert code == 1 and data is None


def test_usage_errors(capsys, tmp_path):
    for argv in (
        [],
        ["build", "--primes", "4", "--points", "0,1"],
        ["build", "--primes", "2", "--points", "0,x"],
        ["embed", "--graph", str(tmp_path / "missing.json")],
        ["frobnicate"],
    ):
        assert run(argv) == 2
    assert "usage:" in capsys.readouterr().err
    assert run(["--help"]) == 0


def test_domain_error_exit_one(capsys):
    assert run(["build", "--primes", "2", "--points", "0,0"]) == 1
    captured = capsys.readouterr()
    assert captured.out == "" and "DuplicatePoints" in captured.err


def test_edge_list_on_stdin_and_determinism(tmp_path):
    cmd = [sys.executable, "-m", "sunitgraph", "represent", "--graph", "-"]
    runs = [
        subprocess.run(cmd, input="0 1\n1 2\n2 0\n2 3\n", capture_output=True, text=True, check=True).stdout
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    assert json.loads(runs[0])["graph"]["n"] == 4


def test_pretty_flag(capsys):
    code, data, out = call(capsys, "--pretty", "build", "--primes", "2", "--points", "0,1")
    assert code == 0 and "\n  " in out and data["edges"] == [[0, 1]]
