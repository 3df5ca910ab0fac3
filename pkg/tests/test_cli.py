import json
import subprocess
import sys
from math import comb

import pytest

from indseq.errors import GraphError
from indseq.cli import ParseError, main, parse_expression, parse_graph
from indseq.graph_core import complete, cycle, join, disjoint_union, path, star


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expression_grammar():
    g = parse_expression("join(union(K4,K4,K4),K37)")
    assert g == join(disjoint_union(complete(4), complete(4), complete(4)), complete(37))
    assert parse_graph("C5") == cycle(5)
    assert parse_graph("star(6)") == star(6)
    assert parse_graph("DQc") is not None  # graph6
    for bad in ["path(", "foo(3)", "K4 + K5", "3", "path(n=3)", "cycle(2)", "__import__('os')"]:
        with pytest.raises(GraphError):
            parse_graph(bad)
    with pytest.raises(ParseError):
        parse_expression("3")


def test_poly(capsys):
    code, out, _ = run(capsys, "poly", "join(union(K4,K4,K4),K37)")
    d = json.loads(out)
    assert code == 0 and d["sequence"] == ["1", "49", "48", "64"] and d["verdict"]["unimodal"] is False
    assert d["schema"] == "indseq/1"
    _, out, _ = run(capsys, "poly", "path(5)")
    assert json.loads(out)["total"] == "13"
    _, out, _ = run(capsys, "poly", "cycle(5)")
    assert json.loads(out)["sequence"] == ["1", "5", "5"]


def test_poly_csv_file_and_output(capsys, tmp_path):
    src = tmp_path / "g.txt"
    src.write_text("P4\n")
    dest = tmp_path / "out.csv"
    code, out, _ = run(capsys, "poly", "--file", str(src), "--format", "csv", "--output", str(dest))
    assert code == 0 and out == ""
    assert dest.read_text() == "t,i_t\n0,1\n1,4\n2,3\n"


def test_exit_codes(capsys):
    code, out, err = run(capsys, "poly", "nonsense(")
    assert code == 2 and out == "" and "parse error" in err
    assert run(capsys, "poly", "--file", "/nonexistent/file")[0] == 2
    assert run(capsys, "poly", "cycle(24)", "--budget-nodes", "10")[0] == 3
    assert run(capsys, "random", "--n", "20", "--p", "0.5")[0] == 4
    assert run(capsys, "random", "--n", "5", "--p", "3/2")[0] == 4
    assert run(capsys, "random", "--n", "5")[0] == 2
    assert run(capsys, "extremal", "--n", "9", "--delta", "1")[0] == 3
    assert run(capsys, "extremal", "--n", "5", "--delta", "5")[0] == 4
    assert run(capsys, "enumerate", "--n", "5", "--shard", "x")[0] == 2
    assert run(capsys, "bounds", "{not json")[0] == 2


def test_random_complete_and_empty(capsys):
    _, out, _ = run(capsys, "random", "--n", "10", "--p", "1")
    rec = json.loads(out)["samples"][0]
    assert rec["sequence"] == [str(1 if t == 0 else 2 * comb(10, t)) for t in range(11)]
    assert rec["unimodal"] and rec["modes"] == [5]
    _, out, _ = run(capsys, "random", "--n", "12", "--p", "0", "--seed", "5")
    rec = json.loads(out)["samples"][0]
    assert rec["sequence"] == [str(comb(24, t)) for t in range(25)]
    assert rec["unimodal"] and rec["log_concave"] and rec["properties"] is None


def test_random_schedules_and_bounds_only(capsys):
    for sched in ("dense", "sqrt", "hamilton"):
        code, out, _ = run(capsys, "random", "--n", "20", "--p-schedule", sched, "--samples", "2", "--bounds-only")
        d = json.loads(out)
        assert code == 0 and len(d["samples"]) == 2 and "sequence" not in d["samples"][0]
        assert d["config"]["schedule"] == sched
    _, out, _ = run(capsys, "random", "--n", "8", "--p-schedule", "dense", "--schedule-const", "0.3", "--format", "csv")
    assert out.splitlines()[0].startswith("stream,edges,K")


def test_random_reproducible(capsys):
    args = ("random", "--n", "12", "--p", "0.5", "--samples", "20", "--seed", "77")
    first = run(capsys, *args)[1]
    assert run(capsys, *args)[1] == first
    assert "unimodal" in json.loads(first)["rates"]


def test_random_worker_independence(capsys):
    args = ("random", "--n", "9", "--p", "1/2", "--samples", "12", "--seed", "3")
    one = run(capsys, *args, "--workers", "1")[1]
    three = run(capsys, *args, "--workers", "3")[1]
    assert one == three


def test_extremal(capsys):
    _, out, _ = run(capsys, "extremal", "--n", "5", "--delta", "2")
    d = json.loads(out)
    assert d["max_value"] == "11" and len(d["maximizers"]) == 2 and d["unique"] is False
    _, out, _ = run(capsys, "extremal", "--n", "6", "--delta", "1", "--t", "3")
    assert json.loads(out)["max_value"] == "10"
    _, out, _ = run(capsys, "extremal", "--n", "5", "--delta", "2", "--x", "2")
    assert json.loads(out)["objective"] == "P(G,2)"


def test_enumerate(capsys):
    _, out, _ = run(capsys, "enumerate", "--n", "4", "--delta", "1")
    assert len(out.splitlines()) == 7
    parts = [run(capsys, "enumerate", "--n", "6", "--shard", f"{i}/3")[1].splitlines() for i in range(3)]
    full = run(capsys, "enumerate", "--n", "6")[1].splitlines()
    assert sorted(sum(parts, [])) == sorted(full) and len(full) == 156


def test_bounds(capsys, tmp_path):
    spec = json.dumps({"n": 6, "rows": ["3f"] * 6})
    _, out, _ = run(capsys, "bounds", spec)
    d = json.loads(out)
    assert d["profile"]["K"] == 1 and d["profile"]["m"] == [0] and d["sandwich_ok"]
    assert all(r["i_t"] == r["lower"] and r["upper"] == r["lower"] + "/1" for r in d["sandwich"])
    f = tmp_path / "b.json"
    f.write_text(spec)
    assert json.loads(run(capsys, "bounds", str(f), "--no-count")[1]).get("sandwich") is None
    code, out, _ = run(capsys, "bounds", "--n", "7", "--p", "0.5", "--seed", "1")
    assert code == 0 and json.loads(out)["graph"]["n"] == 7


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "indseq", "poly", "K3"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["sequence"] == ["1", "3"]
    res = subprocess.run([sys.executable, "-m", "indseq", "--help"], capture_output=True, text=True)
    assert "join(union(K4,K4,K4),K37)" in res.stdout
