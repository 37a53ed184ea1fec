import re

import pytest

from domreconf.cli import main
from domreconf.graph import Graph, encode_graph6, format_edge_list, star_graph
from domreconf.iso import are_isomorphic

K13 = "4 3;0 1;0 2;0 3"
C4 = "4 4;0 1;1 2;2 3;0 3"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def fields(out):
    return dict(tok.split("=", 1) for tok in out.split() if "=" in tok)


def dot_to_graph(dot):
    labels = re.findall(r'^\s+(\d+) \[label="[01]+"\];$', dot, re.M)
    edges = [tuple(map(int, e)) for e in re.findall(r"^\s+(\d+) -- (\d+);$", dot, re.M)]
    return Graph.from_edges(len(labels), edges)


# -- info ---------------------------------------------------------------------


def test_info_star(capsys):
    code, out, _ = run(capsys, "info", K13, "--d0")
    f = fields(out)
    assert code == 0
    assert (f["gamma"], f["Gamma"], f["d0"]) == ("1", "3", "4")
    assert f["bipartite"] == "true" and f["alpha"] == "3"


def test_info_triangle(capsys):
    f = fields(run(capsys, "info", "3 3;0 1;1 2;0 2")[1])
    assert (f["gamma"], f["Gamma"], f["chordal"]) == ("1", "1", "true")
    assert "d0" not in f


def test_info_c4(capsys):
    f = fields(run(capsys, "info", C4)[1])
    assert f["bipartite"] == "true" and f["Gamma"] == "2" and f["chordal"] == "false"


def test_info_graph6_file(tmp_path, capsys):
    path = tmp_path / "star.g6"
    path.write_text(encode_graph6(star_graph(3)) + "\n")
    f = fields(run(capsys, "info", str(path), "--format", "graph6")[1])
    assert f["n"] == "4" and f["m"] == "3"


def test_info_reports_parse_error_with_line(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n0 1\n1 x\n")
    code, _, err = run(capsys, "info", str(path))
    assert code == 1
    assert "bad.txt" in err and "3" in err


# -- build ----------------------------------------------------------------------


def test_build_star_d3(capsys):
    code, out, _ = run(capsys, "build", K13, "--k", "3")
    f = fields(out)
    assert code == 0
    assert f["components"] == "2" and f["nodes"] == "8" and f["isolated"] == "0111"


def test_build_star_x2(capsys):
    f = fields(run(capsys, "build", K13, "--rule", "jump", "--k", "2")[1])
    assert f["components"] == "1" and f["nodes"] == "3"


def test_build_dot_of_d2_star_is_star(tmp_path, capsys):
    g = star_graph(5)
    src = tmp_path / "k15.txt"
    src.write_text(format_edge_list(g))
    dot = tmp_path / "d2.dot"
    assert run(capsys, "build", str(src), "--k", "2", "--out", str(dot))[0] == 0
    text = dot.read_text()
    assert text.startswith("graph D2 {")
    assert are_isomorphic(dot_to_graph(text), g)


def test_build_dot_to_stdout(capsys):
    code, out, _ = run(capsys, "build", K13, "--k", "2", "--out", "-")
    assert code == 0 and "graph D2 {" in out


def test_build_k_out_of_range(capsys):
    code, _, err = run(capsys, "build", K13, "--k", "9")
    assert code == 1 and "k" in err


# -- walk and verify -----------------------------------------------------------------


def test_walk_trivial(capsys):
    code, out, _ = run(capsys, "walk", C4, "--from", "1010", "--to", "1010")
    assert code == 0
    assert out.splitlines()[1:] == ["1010"]


def test_walk_star_disconnected(capsys):
    code, out, _ = run(capsys, "walk", K13, "--k", "3", "--from", "0111", "--to", "1000")
    assert code == 2 and "disconnected" in out


@pytest.mark.parametrize("strategy", ["auto", "bipartite", "oracle"])
def test_walk_c4_between_gamma_sets(tmp_path, capsys, strategy):
    src = tmp_path / "c4.txt"
    src.write_text(C4.replace(";", "\n") + "\n")
    out = tmp_path / "walk.txt"
    code, stdout, _ = run(
        capsys, "walk", str(src), "--k", "3", "--from", "1010", "--to", "0101",
        "--strategy", strategy, "--out", str(out),
    )
    assert code == 0 and "length=" in stdout
    code, stdout, _ = run(capsys, "verify", str(src), str(out))
    assert code == 0 and stdout.startswith("ok")


@pytest.mark.parametrize("strategy", ["union", "near-full", "chordal"])
def test_walk_other_strategies_verify(tmp_path, capsys, strategy):
    # P5 is chordal, bipartite and has two independent edges
    g = "5 4;0 1;1 2;2 3;3 4"
    out = tmp_path / "walk.txt"
    k = "4"
    code, _, err = run(
        capsys, "walk", g, "--k", k, "--from", "1,3", "--to", "0,2,4",
        "--strategy", strategy, "--out", str(out),
    )
    assert code == 0, err
    assert run(capsys, "verify", g, str(out))[0] == 0


def test_walk_precondition_falls_back_to_oracle(capsys):
    code, out, err = run(capsys, "walk", K13, "--k", "4", "--from", "0111", "--to", "1000", "--strategy", "near-full")
    assert code == 0
    assert "falling back to oracle" in err


def test_walk_jump_rule(capsys):
    code, out, _ = run(capsys, "walk", K13, "--rule", "jump", "--k", "2", "--from", "0,1", "--to", "0,2")
    assert code == 0
    assert out.splitlines()[0] == "# k=2 rule=jump"


def test_walk_rejects_non_dominating(capsys):
    code, _, err = run(capsys, "walk", K13, "--from", "0100", "--to", "1000")
    assert code == 1 and "not dominating" in err


def test_verify_rejects_bad_walk(tmp_path, capsys):
    w = tmp_path / "bad.txt"
    w.write_text("# k=3\n1010\n-0 0010\n")
    code, out, _ = run(capsys, "verify", C4, str(w))
    assert code == 2 and "invalid index=1" in out


def test_usage_error(capsys):
    assert run(capsys, "walk", C4)[0] == 1


# -- scan --------------------------------------------------------------------------------


def test_scan_builtin(capsys):
    code, out, _ = run(capsys, "scan", "--max-n", "5")
    assert code == 0 and out.strip().endswith("counterexamples=0")


@pytest.mark.parametrize("only", ["bipartite", "chordal"])
def test_scan_filters(capsys, only):
    code, out, _ = run(capsys, "scan", "--max-n", "6", "--only", only)
    f = fields(out)
    assert code == 0 and f["counterexamples"] == "0" and int(f["scanned"]) > 0


def test_scan_graph6_file_and_checkpoint(tmp_path, capsys):
    src = tmp_path / "graphs.g6"
    src.write_text("\n".join(encode_graph6(star_graph(n)) for n in range(2, 6)) + "\n")
    ck = tmp_path / "ck.txt"
    f = fields(run(capsys, "scan", str(src), "--checkpoint", str(ck))[1])
    assert f["scanned"] == "4"
    code, out, err = run(capsys, "scan", str(src), "--checkpoint", str(ck))
    assert code == 0 and "resumed 4" in err


def test_scan_bad_graph6_line(tmp_path, capsys):
    src = tmp_path / "graphs.g6"
    src.write_text("C~\n!!!\n")
    code, _, err = run(capsys, "scan", str(src))
    assert code == 1 and ":2:" in err
