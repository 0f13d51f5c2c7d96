import pytest

from matroidbench.cli import main
from matroidbench.formats import parse_matroid, print_sgraph, print_expr
from matroidbench.infinite.catalog import bean_graph, ladder
from matroidbench.infinite.sgraph import expr
from matroidbench.infinite.words import UPWord


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_verify_triangle(files, capsys):
    f = files("triangle.circuits", "matroid 3\nelements: a b c\ncircuits:\na b c\n")
    assert run(capsys, "verify", "--system", "circuits", f) == (0, "C1 pass / C2 pass / C3 pass / CM pass\n")


def test_verify_failure_exit_1(files, capsys):
    f = files("bad.ind", "matroid 2\nelements: a b\nindependents:\n-\na b\n")
    code, out = run(capsys, "verify", f)
    assert code == 1 and "I2 fail [witness:" in out


def test_dual_of_u12(files, capsys):
    f = files("u12.matroid", "matroid 2\nelements: a b\nbases:\na\nb\n")
    code, out = run(capsys, "dual", f)
    assert code == 0
    assert parse_matroid(out)[1].as_set == {1, 2}


def test_convert_and_minor(files, capsys):
    f = files("u23.matroid", "matroid 3\nelements: a b c\nbases:\na b\na c\nb c\n")
    code, out = run(capsys, "convert", "--to", "circuits", f)
    assert code == 0 and out.endswith("circuits:\na b c\n")
    code, out = run(capsys, "minor", "--contract", "a", "--delete", "b", f)
    assert code == 0 and out == "matroid 1\nelements: c\nbases:\nc\n"


def test_parse_error_exit_2(files, capsys):
    f = files("bad.matroid", "matroid 2\nelements: a b\nbases:\na q\n")
    assert main(["verify", f]) == 2
    assert "line 4, column 3" in capsys.readouterr().err


def test_missing_file_and_unknown_verb(capsys):
    assert main(["verify", "/nonexistent/file"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "2") == (0, "matroids on 2 elements: 5\n")
    code, out = run(capsys, "enumerate", "3", "--cross-check")
    assert code == 0 and "cross-check true" in out
    assert main(["enumerate", "5"]) == 2


def test_graph_verbs(files, capsys):
    f = files("t.graph", "graph\nvertices: x y z\nedge e1 x y\nedge e2 y z\nedge e3 z x\n")
    assert run(capsys, "graph", "bonds", f) == (0, "e1 e2\ne1 e3\ne2 e3\n")
    assert run(capsys, "graph", "cocircuits-are-bonds", f)[0] == 0
    assert run(capsys, "graph", "is-bond", f, "--edges", "e1")[0] == 1


def test_sgraph_verbs(files, capsys):
    g = files("ladder.sgraph", print_sgraph(ladder()))
    comb = files("comb.expr", print_expr(expr(**{"rail:a": UPWord.ones(), "cross:0": UPWord.ones()})))
    rails = files("rails.expr", print_expr(expr(**{"rail:a": UPWord.ones(), "rail:b": UPWord.ones()})))
    assert run(capsys, "sgraph", "is-tst", g, comb, "--criterion", "both")[0] == 0
    assert run(capsys, "sgraph", "circle", g, rails) == (1, "circle false\n")
    assert run(capsys, "sgraph", "bean", g) == (1, "bean_check false\n")
    assert run(capsys, "sgraph", "ends", g) == (0, "end 0: tails a,b; dominated by -\n")
    code, out = run(capsys, "sgraph", "tst", g, comb)
    assert code == 0 and "cross:0" in out
    assert run(capsys, "sgraph", "circle", g)[0] == 2


def test_sgraph_refusal(files, capsys):
    g = files("bean.sgraph", print_sgraph(bean_graph()))
    e = files("e.expr", "finite: up\n")
    code, out = run(capsys, "sgraph", "independent", g, e, "--matroid", "M_AC")
    assert code == 1 and out.startswith("refused:")


def test_thinsum_verbs(files, capsys):
    f = files("x.thinfam", "thinfam p=3\nvec a 0:1\nvec b 1:1\nvec c 0:1 1:1\n")
    assert run(capsys, "thinsum", "independent", f) == (1, "thinly independent false\n")
    assert run(capsys, "thinsum", "span", f, "--vec", "c") == (0, "c in span true\n")
    # a = c - b is skipped by the greedy walk, b is kept
    assert run(capsys, "thinsum", "extend", f, "--start", "c") == (0, "c b\n")
    assert run(capsys, "thinsum", "axioms", f)[0] == 0
    code, out = run(capsys, "thinsum", "demo")
    assert code == 0 and "C3 fails: certificate holds" in out


def test_deterministic_output(capsys):
    first = run(capsys, "thinsum", "random", "--seed", "7", "--p", "3")
    second = run(capsys, "thinsum", "random", "--seed", "7", "--p", "3")
    assert first == second


def test_catalog(capsys):
    code, out = run(capsys, "catalog", "list")
    assert code == 0 and "BeanGraph" in out.split()
    code, out = run(capsys, "catalog", "run", "Ladder")
    assert code == 0 and out.startswith("PASS Ladder:")
    assert main(["catalog", "run", "Nope"]) == 2
