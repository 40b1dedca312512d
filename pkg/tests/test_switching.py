import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaequiv.charpoly import eta, eta_bar
from zetaequiv.figures import fig1b_pair, fig1b_partition
from zetaequiv.graphs import Digraph, GraphError, build, complement, is_isomorphic
from zetaequiv.poly import parse_poly
from zetaequiv.switching import (
    FIG1A_DET_FACTORS,
    SwitchingPartition,
    build_conjugators,
    certify,
    count_real_roots,
    fig1a_conjugator,
    is_equitable,
    link_kind,
    perform_switching,
    q_block,
    r_block,
    r_sym,
    validate_partition,
    verify_fig1a_conjugator,
)


def mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def ident(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def undirected(n, edges) -> Digraph:
    return build(n, list(edges) + [(b, a) for a, b in edges])


def gm_instance() -> tuple[Digraph, SwitchingPartition]:
    """A 4-cycle W, two apexes joined to complementary halves of it, and a pendant."""
    g = undirected(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (5, 2), (5, 3), (6, 4)])
    return g, SwitchingPartition(7, (), (), ((0, 1, 2, 3),), (4, 5, 6), {})


@pytest.mark.parametrize("n", [2, 4, 6])
def test_q_r_identities(n):
    q = q_block(n)
    assert mat_mul(q, q) == ident(n)
    rs = r_sym(n)
    assert rs == [[Fraction(2, n) - 2 * (i == j) for j in range(n)] for i in range(n)]
    r = r_block(n)
    assert len(r) == 2 * n
    assert all(r[i][j] == -r[j][i] for i in range(2 * n) for j in range(2 * n))
    assert mat_mul(q_block(2 * n), r) == [[-v for v in row] for row in r]
    ones = [[Fraction(1)] * 3 for _ in range(n)]
    assert all(v == 0 for row in mat_mul(rs, ones) for v in row)
    assert q == [[v for v in row] for row in map(list, zip(*q))]


def test_link_kinds():
    g, _ = gm_instance()
    assert link_kind(g, [4], [0, 1, 2, 3]) == "half"
    assert link_kind(g, [0], [1, 3]) == "full"
    assert link_kind(g, [0], [2]) == "none"
    assert link_kind(g, [4], [0, 1, 2]) is None
    assert is_equitable(g, [(0, 1, 2, 3)])
    assert not is_equitable(g, [(0, 1, 2, 3, 4)])


def test_fig1b_validates_and_switches():
    left, right = fig1b_pair()
    p = fig1b_partition()
    rep = validate_partition(left, p)
    assert rep.ok, str(rep)
    h = perform_switching(left, p)
    assert is_isomorphic(h, right)
    assert perform_switching(h, p) == left


def test_fig1b_bad_phi_reported():
    left, _ = fig1b_pair()
    rep = validate_partition(left, fig1b_partition(lambda v: v + 3))
    assert not rep.ok
    assert "phi" in str(rep).lower()


def test_partition_constructor_errors():
    with pytest.raises(GraphError):
        SwitchingPartition(3, ((0,),), ((0,),), (), (1, 2), {0: 0})
    with pytest.raises(GraphError):
        SwitchingPartition(3, (), (), ((0, 1),), (), {})


def test_gm_star_instance():
    g, p = gm_instance()
    rep = validate_partition(g, p)
    assert rep.ok, str(rep)
    h = perform_switching(g, p)
    assert h != g and h.m == g.m
    pair = build_conjugators(g, p, deltas=rep.deltas)
    assert all(v == 0 for row in pair.r for v in row)
    cert = certify(g, h, pair)
    assert cert.ok, cert.summary()
    assert eta(g) == eta(h)


def test_nothing_to_switch():
    g = undirected(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    p = SwitchingPartition(5, (), (), ((0, 1, 2, 3),), (4,), {})
    assert validate_partition(g, p).ok
    assert perform_switching(g, p) == g


@given(st.integers(0, 10 ** 6))
@settings(max_examples=20, deadline=None)
def test_switching_random_gm_instances(seed):
    """Random graphs built around a regular W block and half-linked outside vertices."""
    rng = random.Random(seed)
    w = list(range(4))
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)] if rng.random() < 0.5 else [(0, 2), (1, 3)]
    outside: list[int] = []
    while len(outside) < 2 or rng.random() < 0.4:
        v = 4 + len(outside)
        kind = rng.choice(("none", "half", "full"))
        if kind == "half":
            # complementary halves keep the X-degree constant on W
            half = rng.sample(w, 2)
            edges += [(v, u) for u in half] + [(v + 1, u) for u in w if u not in half]
            outside += [v, v + 1]
        else:
            edges += [(v, u) for u in w] if kind == "full" else []
            outside.append(v)
    for a in outside:
        for b in outside:
            if a < b and rng.random() < 0.5:
                edges.append((a, b))
    n = 4 + len(outside)
    g = undirected(n, edges)
    p = SwitchingPartition(n, (), (), (tuple(w),), tuple(outside), {})
    rep = validate_partition(g, p)
    assert rep.ok, str(rep)
    h = perform_switching(g, p)
    assert eta_bar(g) == eta_bar(h)
    assert eta_bar(complement(g)) == eta_bar(complement(h))
    assert perform_switching(h, p) == g


def test_fig1b_certificate():
    left, right = fig1b_pair()
    p = fig1b_partition()
    rep = validate_partition(left, p)
    h = perform_switching(left, p)
    cert = certify(left, h, build_conjugators(left, p, deltas=rep.deltas))
    assert cert.ok, cert.summary()
    assert cert.determinant == parse_poly("1/16*t^4 + 1/2*t^2 + 1")
    assert eta_bar(left) == eta_bar(right)


def test_sturm_counts():
    assert count_real_roots([Fraction(1), Fraction(0), Fraction(-1)]) == 2
    assert count_real_roots([Fraction(1), Fraction(0), Fraction(1)]) == 0
    assert count_real_roots([Fraction(1), Fraction(0), Fraction(1, 2), Fraction(0), Fraction(1, 16)]) == 0
    assert count_real_roots([Fraction(1), Fraction(-6), Fraction(11), Fraction(-6)]) == 3


def test_fig1a_conjugator():
    cert = verify_fig1a_conjugator()
    assert cert.ok, cert.summary()
    m = fig1a_conjugator()
    assert len(m) == 5 and all(len(r) == 5 for r in m)
    assert FIG1A_DET_FACTORS
