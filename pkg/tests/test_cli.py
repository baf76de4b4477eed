import csv
import io
import json
import subprocess
import sys

import pytest

from nullcolor import __version__
from nullcolor.cli import run

K4 = {
    "n": 4,
    "edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]],
    "field": 5,
    "embedding": {"rotations": [[1, 2, 3], [2, 0, 3], [0, 1, 3], [0, 2, 1]], "outer_face": [0, 1, 2]},
}
C4 = {
    "n": 4,
    "edges": [[0, 1], [1, 2], [2, 3], [0, 3]],
    "embedding": {"rotations": [[1, 3], [2, 0], [3, 1], [0, 2]], "outer_face": [0, 1, 2, 3]},
}


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, doc in {"k4": K4, "c4": C4}.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(doc))
        paths[name] = str(p)
    lists = tmp_path / "lists.json"
    lists.write_text(json.dumps({"lists": [[0, 1, 2, 3]] * 4}))
    paths["lists"] = str(lists)
    return paths


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def test_nice_monomial_k4(files):
    code, text = call("nice-monomial", "--graph", files["k4"], "--edge", "0,1")
    assert code == 0
    rep = json.loads(text)
    assert rep["version"] == __version__
    assert rep["config"]["command"] == "nice-monomial"
    assert rep["config"]["options"]["edge"] == [0, 1]
    assert rep["result"]["monomial"] == [0, 0, 2, 3]


def test_c4_is_rejected(files, capsys):
    code, _ = call("nice-monomial", "--graph", files["c4"], "--edge", "0,1")
    assert code == 1
    assert "NonTriangularInnerFace" in capsys.readouterr().err


def test_bounds_command():
    code, text = call("bounds", "--S", "20", "--n", "4", "--d", "6", "--t", "5")
    assert code == 0
    res = json.loads(text)["result"]
    assert res["weak_bound"] == {"t": 5, "num": 10, "den": 4}
    assert res["weak_bound_text"] == "5^(10/4)"


def test_bounds_precondition_is_input_error(capsys):
    code, _ = call("bounds", "--S", "5", "--n", "4", "--d", "6", "--t", "5")
    assert code == 1
    assert "PreconditionViolated" in capsys.readouterr().err


def test_usage_error_exits_one(capsys):
    code, _ = call("no-such-command")
    assert code == 1
    code, _ = call("nice-monomial", "--edge", "x,y")
    assert code == 1


def test_missing_file(capsys):
    code, _ = call("validate", "--graph", "/nonexistent/graph.json")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["validate", "--graph", "{k4}"],
        ["expand", "--graph", "{k4}", "--cap", "2"],
        ["coeff", "--graph", "{k4}", "--monomial", "0,1,2,3"],
        ["an-number", "--graph", "{k4}"],
        ["nice-monomial", "--graph", "{k4}"],
        ["triangle-monomial", "--graph", "{k4}", "--triangle", "0,1,2"],
        ["clique-sum-monomial", "--seed", "4", "--random-decoration", "--field", "7"],
        ["matching-at3", "--graph", "{k4}"],
        ["solve", "--graph", "{k4}", "--lists", "{lists}"],
        ["count", "--graph", "{k4}", "--lists", "{lists}"],
        ["adversary", "--graph", "{k4}", "--group", "3"],
        ["embed-cyclic", "--m", "9"],
        ["bounds", "--sizes", "3,3", "--d", "2"],
        ["census", "--count", "3", "--seed", "1"],
    ],
)
def test_every_subcommand_is_deterministic(argv, files):
    argv = [a.format(**files) for a in argv]
    code1, first = call(*argv)
    code2, second = call(*argv)
    assert code1 == code2 == 0
    assert first == second
    assert json.loads(first)["config"]["command"] == argv[0]


def test_expected_results(files):
    res = json.loads(call("an-number", "--graph", files["k4"])[1])["result"]
    assert res["an_number"] == 3
    res = json.loads(call("count", "--graph", files["k4"])[1])["result"]
    assert res["count"] == 5 * 4 * 3 * 2 and res["bound_met"] is True
    res = json.loads(call("bounds", "--sizes", "3,3", "--d", "2")[1])["result"]
    assert res["min_product"] == 3 and res["q"] == [1, 3]
    res = json.loads(call("embed-cyclic", "--m", "5", "--totient")[1])["result"]
    assert res["field_size"] == 16 and res["p"] == 2


def test_clique_sum_tree_file(tmp_path):
    tree = {
        "field": 7,
        "leaves": [K4["embedding"], "V8"],
        "glues": [{"ident": [[0, 0], [1, 1]], "drop": [[0, 1]]}],
    }
    p = tmp_path / "tree.json"
    p.write_text(json.dumps(tree))
    code, text = call("clique-sum-monomial", "--tree", str(p))
    assert code == 0
    res = json.loads(text)["result"]
    assert res["max_degree"] <= 4 and res["n"] == 10 and res["m"] == 6 + 12 - 2


def test_census_csv_and_out(tmp_path):
    out = tmp_path / "census.csv"
    code, text = call("census", "--count", "4", "--format", "csv", "--out", str(out))
    assert code == 0 and text == ""
    rows = list(csv.DictReader(out.read_text().splitlines()))
    assert len(rows) == 4
    assert all(int(r["max_degree"]) <= 4 and int(r["n"]) <= 10 for r in rows)


def test_console_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "nullcolor.cli", "validate", "--graph", files["k4"]],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["near_triangulation"]["triangulation"] is True
