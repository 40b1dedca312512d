from pathlib import Path

import pytest

from zetaequiv.cli import main
from zetaequiv.figures import fig1b_pair, fig1b_partition
from zetaequiv.formats import format_partition, parse_digraph, parse_invader, read_text
from zetaequiv.graphs import is_isomorphic
from zetaequiv.invasion import invade
from zetaequiv.poly import parse_poly

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eta(capsys):
    code, out, _ = run(capsys, "eta", DATA / "k2.g", "--graph")
    assert code == 0
    assert parse_poly(out.strip()) == parse_poly("x^2 + 2*x*tu + tu^2 - uu^2")
    code, out, _ = run(capsys, "eta", DATA / "k2.g", "--complete")
    assert code == 0 and "y" in out
    assert run(capsys, "eta", DATA / "k2.g", "--graph", "--complete")[0] == 2


def test_equiv(capsys):
    assert run(capsys, "equiv", DATA / "fig1a_left.dg", DATA / "fig1a_right.dg", "--mode", "digraph")[0] == 0
    assert run(capsys, "equiv", DATA / "fig1b_left.g", DATA / "fig1b_right.g", "--mode", "graph")[0] == 0
    assert run(capsys, "equiv", DATA / "fig1a_left.dg", DATA / "fig1a_left.dg")[0] == 0
    code, _, err = run(capsys, "equiv", DATA / "k2.g", DATA / "c3.g", "--mode", "graph")
    assert code == 2 and "error" in err


def test_not_equivalent(capsys, tmp_path):
    other = tmp_path / "other.dg"
    other.write_text("n 5\n1 2\n2 3\n3 4\n4 5\n5 1\n")
    assert run(capsys, "equiv", DATA / "fig1a_left.dg", other)[0] == 1


def test_zeta_inv(capsys):
    code, out, _ = run(capsys, "zeta-inv", DATA / "c3.g", "--spec", "ihara")
    assert code == 0
    assert parse_poly(out.strip()) == parse_poly("1 - 2*uu^3 + uu^6")
    code, out, _ = run(capsys, "zeta-inv", DATA / "k2.g", "--trunc", "3", "--oracle")
    assert code == 0 and "walks[3]" in out
    assert run(capsys, "zeta-inv", DATA / "k2.g", "--oracle")[0] == 2


def test_invade(capsys):
    code, out, _ = run(capsys, "invade", DATA / "path3.inv", DATA / "c3.g", "--symmetric", "--charpoly", "both")
    assert code == 0
    graph_text = out.split("charpoly")[0]
    assert parse_digraph(graph_text).n == 6
    assert "MISMATCH" not in out


def test_switch(capsys):
    code, out, _ = run(capsys, "switch", DATA / "fig1b_left.g", DATA / "fig1b.partition", "--certify")
    assert code == 0
    text = "".join(line + "\n" for line in out.splitlines() if not line.startswith(("PASS", "FAIL", "det")))
    assert is_isomorphic(parse_digraph(text), fig1b_pair()[1])
    assert "FAIL" not in out


def test_switch_invalid(capsys, tmp_path):
    bad = tmp_path / "bad.partition"
    bad.write_text(format_partition(fig1b_partition(lambda v: v + 3)))
    code, out, err = run(capsys, "switch", DATA / "fig1b_left.g", bad)
    assert code == 1 and out == ""
    assert "invalid" in err


def test_search(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--n", "4", "--mode", "digraph", "--connected")
    assert code == 0
    assert "classes searched: 199" in out and "size >= 2: 0" in out
    dest = tmp_path / "report.txt"
    assert run(capsys, "search", "--n", "3", "--mode", "graph", "--out", dest)[0] == 0
    assert dest.read_text().startswith("# search")
    assert run(capsys, "search", "--n", "9", "--mode", "graph")[0] == 2


def test_verify_identities_reproducible(capsys):
    first = run(capsys, "verify-identities", "--seed", "4", "--trials", "3")
    second = run(capsys, "verify-identities", "--seed", "4", "--trials", "3")
    assert first == second
    assert first[0] == 0 and "FAIL" not in first[1]


def test_reproduce_figures(capsys):
    code, out, _ = run(capsys, "reproduce-figures")
    assert code == 0
    assert out.count("PASS") >= 5 and "FAIL" not in out


@pytest.mark.parametrize("argv", [[], ["bogus"], ["eta"], ["eta", "/nonexistent/file"], ["search", "--n", "x"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_malformed_input(capsys, tmp_path):
    bad = tmp_path / "bad.g"
    bad.write_text("n 2\n1 5\n")
    code, _, err = run(capsys, "eta", bad)
    assert code == 2 and "out of range" in err


def test_printed_digraphs_reparse(capsys):
    """A digraph printed by a subcommand re-parses to the digraph the library builds."""
    code, out, _ = run(capsys, "invade", DATA / "path3.inv", DATA / "fig1a_left.dg")
    assert code == 0
    s = parse_invader(read_text(DATA / "path3.inv"))
    assert parse_digraph(out) == invade(s, parse_digraph(read_text(DATA / "fig1a_left.dg")))
