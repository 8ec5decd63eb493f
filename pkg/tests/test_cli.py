from __future__ import annotations

import json

import pytest

from kappa1.cli import EXIT_BAD_INPUT, EXIT_OK, EXIT_UNDECIDED, main
from kappa1.graph import parse_graph, serialize_graph, cycle_graph, path_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def c5_file(tmp_path):
    p = tmp_path / "c5.txt"
    p.write_text(serialize_graph(cycle_graph(5)))
    return p


def test_gen(tmp_path, capsys):
    out = tmp_path / "kg.txt"
    assert run(capsys, "gen", "7", "3", "-o", str(out))[0] == EXIT_OK
    g = parse_graph(out.read_text())
    assert (g.vertex_count, g.edge_count, g.params) == (35, 70, (7, 3))
    code, text, _ = run(capsys, "gen", "5", "2")
    assert code == EXIT_OK and parse_graph(text).vertex_count == 10
    code, text, _ = run(capsys, "gen", "3", "3")
    assert parse_graph(text).vertex_count == 1


@pytest.mark.parametrize("spec, kappa", [("kg:7,3", 4), ("kg:8,3", 10)])
def test_kappa(capsys, spec, kappa):
    code, text, _ = run(capsys, "kappa", spec, "--json", "--threads", "1")
    assert code == EXIT_OK and json.loads(text)["kappa"] == kappa


def test_kappa_path(tmp_path, capsys):
    p = tmp_path / "p3.txt"
    p.write_text(serialize_graph(path_graph(3)))
    code, text, _ = run(capsys, "kappa", str(p))
    assert code == EXIT_OK and "kappa = 1" in text


def test_kappa1(capsys, c5_file):
    code, text, _ = run(capsys, "kappa1", "kg:7,3", "--json", "--threads", "1")
    doc = json.loads(text)
    assert code == EXIT_OK and doc["status"] == "Exact" and doc["lower_bound"] == 6
    code, text, _ = run(capsys, "kappa1", str(c5_file), "--json")
    assert code == EXIT_OK and json.loads(text)["status"] == "NoSuperCut"
    code, text, _ = run(capsys, "kappa1", "kg:9,3", "--threads", "1")
    assert code == EXIT_OK and "kappa1 = 37" in text


def test_kappa1_interval_exit_code(tmp_path, capsys):
    from kappa1.connectivity import Status, super_connectivity
    from kappa1.corpus import connected_graphs_le8

    g = next(g for g in connected_graphs_le8() if g.vertex_count >= 5 and super_connectivity(g, "flow").status is Status.INTERVAL)
    p = tmp_path / "g.txt"
    p.write_text(serialize_graph(g))
    assert run(capsys, "kappa1", str(p), "--strategy", "flow")[0] == EXIT_UNDECIDED
    assert run(capsys, "kappa1", str(p), "--strategy", "oracle")[0] == EXIT_OK


def test_oracle_command(capsys):
    code, text, _ = run(capsys, "oracle", "kg:5,2", "--json")
    assert code == EXIT_OK and json.loads(text)["value"] == 4
    code, text, _ = run(capsys, "oracle", "kg:5,2", "--max-cut-size", "3")
    assert code == EXIT_UNDECIDED and "no super cut of size <= 3" in text


def test_claims_formula_verify(capsys):
    code, text, _ = run(capsys, "claims", "9", "--json")
    doc = json.loads(text)
    assert code == EXIT_OK and [r["exact_count"] for r in doc["reports"]] == [27, 30, 36]
    code, text, _ = run(capsys, "formula", "9", "3")
    assert code == EXIT_OK and text.strip() == "37"
    code, text, _ = run(capsys, "verify", "7", "7", "--threads", "1")
    assert code == EXIT_OK and "Confirmed" in text


def test_export(tmp_path, capsys):
    out = tmp_path / "p.dot"
    assert run(capsys, "export", "kg:5,2", "-o", str(out))[0] == EXIT_OK
    first = out.read_text()
    nodes = [ln for ln in first.splitlines() if ln.endswith(";") and "--" not in ln]
    assert len(nodes) == 10 and '"{1,2}"' in first
    run(capsys, "export", "kg:5,2", "-o", str(out))
    assert out.read_text() == first


def test_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("graph 2 1\ne 0 5\n")
    code, _, err = run(capsys, "kappa", str(bad))
    assert code == EXIT_BAD_INPUT and "line 2" in err
    assert run(capsys, "formula", "6", "3")[0] == EXIT_BAD_INPUT
    assert run(capsys, "kappa", str(tmp_path / "missing.txt"))[0] == EXIT_BAD_INPUT
    assert run(capsys, "verify", "6", "7")[0] == EXIT_BAD_INPUT
    with pytest.raises(SystemExit) as info:
        main(["kappa1", "kg:5,2", "--strategy", "bogus"])
    assert info.value.code == EXIT_BAD_INPUT


def test_json_stable_across_thread_counts(capsys):
    outs = {run(capsys, "kappa1", "kg:7,3", "--json", "--threads", t)[1] for t in ("1", "2")}
    assert len(outs) == 1


def test_threads_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("KAPPA1_THREADS", "1")
    assert run(capsys, "kappa", "kg:5,2")[0] == EXIT_OK
