import json

import pytest

from tuza import io
from tuza.cli import main
from tuza.graph import Graph, PartitionedGraph


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.json"):
        path = tmp_path / name
        path.write_text(io.dumps(g))
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_gen_and_bounds(capsys, tmp_path):
    out = tmp_path / "s.json"
    code, _ = run(capsys, "--seed", "1", "gen", "split", "--n", "10", "--delta-min", "6",
                  "--out", str(out))
    assert code == 0
    pg = io.load(out)
    assert pg.is_split and pg.graph.min_degree >= 6
    code, cap = run(capsys, "bounds", str(out))
    assert code == 0 and "nu_lower_split" in json.loads(cap.out)


def test_oracles_cli(capsys, graph_file):
    path = graph_file(Graph.complete(5))
    assert json.loads(run(capsys, "nu", path)[1].out)["nu"] == 2
    assert json.loads(run(capsys, "tau", path)[1].out)["tau"] == 4
    assert json.loads(run(capsys, "maxcut", path)[1].out)["cut"] == 6
    hit = json.loads(run(capsys, "hit", "--method", "cut", path)[1].out)
    assert hit["size"] <= 4


def test_color_cli(capsys, graph_file):
    path = graph_file(PartitionedGraph.complete_multipartite([3, 3]))
    classes = json.loads(run(capsys, "color", "--method", "konig", path)[1].out)
    assert len(classes) == 3
    tri = graph_file(PartitionedGraph.complete_multipartite([2, 1, 1]), "t.json")
    classes = json.loads(run(capsys, "color", "--method", "class1", tri)[1].out)
    assert len(classes) == 3


def test_ffactor_cli(capsys, graph_file, tmp_path):
    path = graph_file(PartitionedGraph.complete_multipartite([2, 2]))
    degrees = tmp_path / "f.json"
    degrees.write_text(json.dumps({str(v): 1 for v in range(4)}))
    edges = json.loads(run(capsys, "ffactor", path, str(degrees))[1].out)["edges"]
    assert len(edges) == 2


def test_certify_cli(capsys):
    code, cap = run(capsys, "certify-4partite", "--parts", "1,1,1,2", "--exact")
    data = json.loads(cap.out)
    assert code == 0
    assert data["ratio"] == "3/2" and data["nu_exact"] == 2 and data["tau_exact"] == 3


def test_reports_cli(capsys, tmp_path):
    code, cap = run(capsys, "sweep-4partite", "--a-max", "3", "--format", "csv")
    assert code == 0 and cap.out.startswith("instance_id,")
    out = tmp_path / "r.json"
    code, _ = run(capsys, "verify-split", "--trials", "3", "--n-max", "8", "--out", str(out))
    assert code == 0 and json.loads(out.read_text())["summary"]["failed"] == 0
    code, _ = run(capsys, "verify-tripartite", "--trials", "3", "--n-max", "8")
    assert code == 0


def test_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "edges": [[0, 0]]}')
    code, cap = run(capsys, "nu", str(bad))
    assert code == 2 and "GraphFormatError" in cap.err
    assert run(capsys, "nu", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "hit", "--method", "clique", str(bad))[0] == 2
    assert run(capsys, "certify-4partite", "--parts", "1,1,1,1")[0] == 2


def test_failed_rows_exit_1(capsys, monkeypatch):
    from tuza import cli
    from tuza.harness import ExperimentReport, ReportRow
    monkeypatch.setattr(cli, "sweep_4partite", lambda *a, **k: ExperimentReport(
        "x", [ReportRow("r", 5, 9, "2,1,1,1", passed=False)]))
    assert run(capsys, "sweep-4partite")[0] == 1
