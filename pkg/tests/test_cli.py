import json
import subprocess
import sys

import pytest

from wellcov.cli import SCHEMA, RunReport, build_parser, main
from wellcov.generators import books, clique_fringe, cycle, figure1, path, spider, star, SplitMix64
from wellcov.graph import Graph, format_dimacs, format_edge_list


@pytest.fixture
def write(tmp_path):
    def _write(g, name="g.txt", dimacs=False):
        p = tmp_path / name
        p.write_text(format_dimacs(g) if dimacs else format_edge_list(g))
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_yes(capsys, write):
    code, out, _ = run(capsys, "check", write(cycle(5)))
    assert code == 0 and out.startswith("WELL_COVERED")


@pytest.mark.parametrize("algo", ["auto", "oracle", "mvc-enum", "vcplus", "degen"])
def test_check_no_with_witnesses(capsys, write, algo):
    g = cycle(6)
    code, out, _ = run(capsys, "check", "--algo", algo, "--json", write(g))
    assert code == 1
    data = json.loads(out)
    assert data["schema"] == SCHEMA and data["well_covered"] is False
    assert len(data["witness_small"]) < len(data["witness_large"])


def test_kernel_shortcut_on_star(capsys, write):
    code, out, _ = run(capsys, "check", "--json", write(star(6)))
    data = json.loads(out)
    assert code == 1 and data["algorithm"] == "auto:kernel"
    assert data["witness_small"] == [0] and len(data["witness_large"]) == 6


def test_isolated_vertices_kept_in_witnesses(capsys, write):
    g = Graph(5, [(0, 1), (1, 2)])
    code, out, _ = run(capsys, "check", "--json", write(g))
    data = json.loads(out)
    assert code == 1 and data["n"] == 5 and data["alpha"] == 4
    assert {3, 4} <= set(data["witness_small"])


def test_json_fields_and_round_trip(capsys, write):
    code, out, _ = run(capsys, "check", "--algo", "vcplus", "--json", "--emit-tree-stats", write(path(5)))
    data = json.loads(out)
    assert set(data) == {"schema", "input", "n", "m", "algorithm", "well_covered", "vc", "vc_plus",
                         "alpha", "witness_small", "witness_large", "tree_leaves", "tree_nodes",
                         "elapsed_ms"}
    rep = RunReport.from_json(out)
    assert RunReport.from_json(rep.to_json()) == rep
    with pytest.raises(ValueError):
        RunReport.from_json(json.dumps({**data, "schema": 2}))


def test_tree_stats_hidden_by_default(capsys, write):
    _, out, _ = run(capsys, "check", "--algo", "degen", "--json", write(path(5)))
    assert "tree_leaves" not in json.loads(out)


def test_p4_needs_class(capsys, write):
    code, _, err = run(capsys, "check", "--algo", "p4", write(cycle(5)))
    assert code == 2 and "--class" in err
    code, out, _ = run(capsys, "check", "--algo", "p4", "--class", "ext-laden", write(spider(3)))
    assert code == 0
    code, _, err = run(capsys, "check", "--algo", "p4", "--class", "qq4", "--q", "5",
                       "--verify-class", write(cycle(5)))
    assert code == 2 and "not in class" in err


def test_dimacs_input(capsys, write):
    code, out, _ = run(capsys, "check", "--format", "dimacs", write(cycle(7), "g.col", dimacs=True))
    assert code == 0


@pytest.mark.parametrize("text", ["0 1\n2 2\n", "0 x\n", "p edge 2 1\ne 1 5\n"])
def test_malformed_exit_2(capsys, tmp_path, text):
    p = tmp_path / "bad.txt"
    p.write_text(text)
    code, _, err = run(capsys, "check", str(p))
    assert code == 2 and err.startswith("error:")


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "check", str(tmp_path / "none.txt"))
    assert code == 2


def test_stats(capsys, write):
    code, out, _ = run(capsys, "stats", write(cycle(7)))
    assert code == 0 and out.split() == ["alpha=3", "vc=4", "vc_plus=4", "i_min=3", "d=2"]
    code, out, _ = run(capsys, "stats", "--json", write(path(5)))
    data = json.loads(out)
    assert (data["alpha"], data["vc"], data["vc_plus"], data["i_min"]) == (3, 2, 3, 2)
    code, _, _ = run(capsys, "stats", "--max-n", "4", write(path(5)))
    assert code == 2


def test_kernel_command(capsys, write):
    code, out, _ = run(capsys, "kernel", write(star(6)))
    assert code == 1 and out.startswith("NOT_WELL_COVERED")
    code, out, _ = run(capsys, "kernel", write(cycle(5)))
    assert code == 0 and out.splitlines()[0] == "# vertices: 5"
    assert len(out.splitlines()) == 6


def test_enum_mvc(capsys, write):
    code, out, _ = run(capsys, "enum-mvc", write(cycle(4)))
    assert code == 0 and sorted(out.splitlines()) == ["0 2", "1 3"]
    code, out, _ = run(capsys, "enum-mvc", "--count-only", write(cycle(7)))
    assert out.strip() == "7"
    code, out, _ = run(capsys, "enum-mvc", "--count-only", write(figure1()))
    assert code == 0 and int(out) > 0


def test_gen_is_deterministic(capsys):
    argv = ["gen", "--family", "gnp", "--n", "20", "--p", "0.3", "--seed", "4"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b and a.strip()
    code, _, err = run(capsys, "gen", "--family", "gnp", "--n", "5")
    assert code == 2


def test_bench(capsys, tmp_path):
    (tmp_path / "c5.txt").write_text(format_edge_list(cycle(5)))
    (tmp_path / "p5.txt").write_text(format_edge_list(path(5)))
    (tmp_path / "junk.txt").write_text("0 0\n")
    code, out, _ = run(capsys, "bench", "--json", str(tmp_path))
    data = json.loads(out)
    assert code == 0 and data["schema"] == SCHEMA
    rows = [r for r in data["rows"] if "error" not in r]
    assert len(rows) == 6 and not any(r["violation"] for r in rows)
    assert any("error" in r for r in data["rows"])
    code, _, _ = run(capsys, "bench", "--algos", "p4", str(tmp_path))
    assert code == 2


def test_budget_env(capsys, write, monkeypatch):
    g = Graph(16, [(2 * i, 2 * i + 1) for i in range(8)])
    monkeypatch.setenv("WCOV_ORACLE_BUDGET", "10")
    code, _, err = run(capsys, "check", "--algo", "oracle", write(g))
    assert code == 2 and "WCOV_ORACLE_BUDGET" in err
    code, _, _ = run(capsys, "check", "--algo", "oracle", "--budget", "1000", write(g))
    assert code == 0


def test_mvc_enum_large_instance(capsys, write):
    g = clique_fringe(2000, 20, SplitMix64(1))
    code, out, _ = run(capsys, "check", "--algo", "mvc-enum", "--json", write(g))
    assert code in (0, 1) and json.loads(out)["vc"] == 20


def test_degen_books(capsys, write):
    code, out, _ = run(capsys, "check", "--algo", "degen", "--json", write(books(2000, 4)))
    assert code == 1


def test_parser_lists_commands():
    text = build_parser().format_help()
    for cmd in ("check", "stats", "kernel", "enum-mvc", "gen", "bench"):
        assert cmd in text


def test_module_entry_point(tmp_path):
    p = tmp_path / "c5.txt"
    p.write_text(format_edge_list(cycle(5)))
    res = subprocess.run([sys.executable, "-m", "wellcov", "check", str(p)], capture_output=True, text=True)
    assert res.returncode == 0 and "WELL_COVERED" in res.stdout
