import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from zetaequiv.graphs import Digraph

VARS = ("x", "y", "tu", "td", "uu", "ud", "a", "b")


@st.composite
def simple_digraphs(draw, max_n: int = 5, min_n: int = 1) -> Digraph:
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    adj = [[int(bits[i * n + j] and i != j) for j in range(n)] for i in range(n)]
    return Digraph.from_matrix(adj)


@st.composite
def multi_digraphs(draw, max_n: int = 4, max_mult: int = 2) -> Digraph:
    n = draw(st.integers(1, max_n))
    vals = draw(st.lists(st.integers(0, max_mult), min_size=n * n, max_size=n * n))
    return Digraph.from_matrix([vals[i * n:(i + 1) * n] for i in range(n)])


@st.composite
def graphs(draw, max_n: int = 6, min_n: int = 1) -> Digraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    adj = [[0] * n for _ in range(n)]
    for (i, j), on in zip(pairs, bits):
        if on:
            adj[i][j] = adj[j][i] = 1
    return Digraph.from_matrix(adj)


def small_fractions(lo: int = -5, hi: int = 5):
    return st.builds(Fraction, st.integers(lo, hi), st.integers(1, 4))


@pytest.fixture
def rng():
    return random.Random(20240611)


# -- acceptance reporting --------------------------------------------------------

ACCEPTANCE: dict[int, tuple[str, bool, float, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        name, ok, secs, budget = ACCEPTANCE[num]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{verdict} criterion {num:2d}: {name} ({secs:.2f}s, budget {budget:g}s)")
