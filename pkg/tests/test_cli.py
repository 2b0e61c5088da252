import io
import json
import sys

import pytest

from p5k5e.cli import main
from p5k5e.graph import Graph, to_edge_list, to_graph6
from p5k5e.patterns import K5_MINUS_E


def run(argv, stdin=""):
    out = io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out)
    finally:
        sys.stdin = old
    return code, out.getvalue()


def test_color_c5_json():
    code, out = run(["color", "--format", "json"], to_graph6(Graph.cycle(5)) + "\n")
    rec = json.loads(out)
    assert code == 0 and rec["k"] == 3 and len(rec["colors"]) == 5
    assert rec["guarantee"] == "<= max(7, omega)"


def test_color_edge_list_input():
    code, out = run(["color", "--format", "json"], to_edge_list(Graph.cycle(5)))
    assert code == 0 and json.loads(out)["k"] == 3


def test_color_out_of_class(capsys):
    code, _ = run(["color"], to_graph6(Graph.path(5)) + "\n")
    assert code == 2
    assert "P5" in capsys.readouterr().err


def test_analyze_k5e():
    code, out = run(["analyze", "--format", "json"], to_graph6(K5_MINUS_E.as_graph()) + "\n")
    rec = json.loads(out)
    assert code == 0 and rec["in_class"] is False and rec["witness_pattern"] == "K5-e"
    assert rec["witness"] is not None


def test_text_and_json_report_same_facts():
    g6 = to_graph6(Graph.cycle(5)) + "\n"
    _, js = run(["analyze", "--format", "json"], g6)
    _, txt = run(["analyze"], g6)
    rec = json.loads(js)
    for key, value in rec.items():
        shown = json.dumps(value) if isinstance(value, (list, dict)) else str(value)
        assert f"{key}: {shown}" in txt


def test_find_and_build():
    code, out = run(["build", "--name", "f1"])
    assert code == 0
    code, out = run(["find", "--pattern", "F1", "--format", "json"], out)
    rec = json.loads(out)
    assert code == 0 and len(rec["embeddings"]) >= 1
    code, out = run(["build", "--name", "h_star", "--format", "json"])
    rec = json.loads(out)
    assert code == 0 and all(rec["checklist"].values())


def test_census_small_run():
    code, out = run(["census", "--max-n", "5", "--format", "json"])
    rec = json.loads(out)
    assert code == 0 and rec["ok"] and rec["violations"] == []


def test_witness_command():
    code, out = run(["witness", "--predicate", "omega7_atom", "--max-n", "8", "--format", "json"])
    assert code == 0 and json.loads(out)["found"] is False


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\nformat = json\nmax_n = 4\n")
    code, out = run(["census", "--config", str(cfg)])
    assert code == 0 and json.loads(out)["n_max"] == 4
    code, out = run(["census", "--config", str(cfg), "--format", "text"])
    assert code == 0 and out.startswith("orders")
    cfg.write_text("colour = red\n")
    assert run(["census", "--config", str(cfg)])[0] == 2


@pytest.mark.parametrize(
    "argv, stdin",
    [
        ([], ""),
        (["nope"], ""),
        (["color"], "not graph6 \x01\n"),
        (["find"], "Dhc\n"),
        (["find", "--pattern", "XYZ"], "Dhc\n"),
        (["build"], ""),
        (["build", "--name", "unknown"], ""),
        (["census", "--max-n", "9"], ""),
        (["census", "--jobs", "0"], ""),
        (["witness", "--predicate", "zzz"], ""),
        (["witness", "--max-n", "11"], ""),
        (["color", "/nonexistent/file"], ""),
    ],
)
def test_usage_errors_exit_2(argv, stdin):
    assert run(argv, stdin)[0] == 2


def test_census_violation_exit_1(monkeypatch):
    import p5k5e.census as census

    monkeypatch.setattr(census, "color_connected_report", lambda g: (_ for _ in ()).throw(RuntimeError("x")))
    assert run(["census", "--max-n", "3"])[0] == 1
