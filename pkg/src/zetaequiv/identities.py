"""Random instance generators and the identity checks built from them."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .charpoly import eta_complete, markov_denominator, markov_poly, markov_value
from .graphs import Digraph, WeightedDigraph, build
from .invasion import Invader, direct_char_poly, invade, invasion_char_poly
from .zeta import (
    DOWN,
    UP,
    build_bidirectional,
    ihara_determinant,
    log_series_from_det,
    walk_series_oracle,
    zeta_closed_form_outgoing,
    zeta_closed_form_reversing,
    zeta_inverse,
)

WEIGHTS = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-1), Fraction(3), Fraction(-2, 3), Fraction(5, 4))


# -- generators ---------------------------------------------------------------


def random_digraph(rng: random.Random, n: int, p: float = 0.4, *, loops: bool = False,
                   max_mult: int = 1) -> Digraph:
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if (i != j or loops) and rng.random() < p:
                adj[i][j] = rng.randint(1, max_mult)
    return Digraph.from_matrix(adj)


def random_simple_digraph(rng: random.Random, n: int, p: float = 0.4) -> Digraph:
    return random_digraph(rng, n, p)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Digraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build(n, edges + [(j, i) for i, j in edges])


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> Digraph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_weakly_connected():
            return g


def random_reciprocal_digraph(rng: random.Random, n_max: int = 4, m_max: int = 6) -> WeightedDigraph:
    """Weighted digraph whose mutually reverse edges carry reciprocal weights.

    Loops get weight +1 or -1.
    """
    n = rng.randint(1, n_max)
    m = rng.randint(1, m_max)
    weights: dict[tuple[int, int], Fraction] = {}
    tries = 0
    while len(weights) < m and tries < 50:
        tries += 1
        i, j = rng.randrange(n), rng.randrange(n)
        if (i, j) in weights:
            continue
        if i == j:
            weights[(i, j)] = Fraction(rng.choice((1, -1)))
        elif (j, i) in weights:
            weights[(i, j)] = 1 / weights[(j, i)]
        else:
            weights[(i, j)] = rng.choice(WEIGHTS)
    return WeightedDigraph.from_dict(n, weights)


def random_invader(rng: random.Random, n_max: int = 5, max_mult: int = 2) -> Invader:
    n = rng.randint(2, n_max)
    return Invader(random_digraph(rng, n, 0.45, loops=True, max_mult=max_mult))


# -- checks ---------------------------------------------------------------------


def check_closed_forms(g: WeightedDigraph) -> tuple[bool, bool]:
    """(reversing closed form ok, outgoing closed form ok)."""
    rev = zeta_closed_form_reversing(g) == zeta_inverse(g, "reversing")
    out = zeta_closed_form_outgoing(g) == zeta_inverse(g, {"tdd": 1, "tud": 1, "tdu": 1})
    return rev, out


def _mat_mul(a, b):
    k = len(b)
    return [[sum((a[i][l] * b[l][j] for l in range(k)), Fraction(0)) for j in range(k)] for i in range(len(a))]


def check_b_algebra(g: WeightedDigraph) -> bool:
    """B_ud^2 = 0, B_ud B_du + B_du B_ud = I and B_uu^3 = B_uu."""
    sys = build_bidirectional(g)
    k = sys.size
    b = sys.B
    ident = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    zero = [[Fraction(0)] * k for _ in range(k)]
    bud, bdu, buu = b[(UP, DOWN)], b[(DOWN, UP)], b[(UP, UP)]
    anti = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(_mat_mul(bud, bdu), _mat_mul(bdu, bud))]
    return _mat_mul(bud, bud) == zero and anti == ident and _mat_mul(_mat_mul(buu, buu), buu) == buu


def check_walk_series(g: WeightedDigraph | Digraph, order: int) -> bool:
    """k * [s^k](-log det(I - sM)) equals the closed-walk tally of length k."""
    tally = walk_series_oracle(g, order)
    logs = log_series_from_det(zeta_inverse(g), order)
    return all(tally[k] == logs[k - 1] * k for k in range(1, order + 1))


def check_ihara(g: Digraph) -> bool:
    return zeta_inverse(g, "ihara") == ihara_determinant(g)


def check_invasion(s: Invader, g: Digraph) -> bool:
    return invasion_char_poly(s, g) == direct_char_poly(invade(s, g))


def check_markov(g: Digraph, rng: random.Random, points: int) -> bool:
    """f(a,b) mu(x,a,b) = eta-bar(a + xa + xb, x, 1) at random positive rational points."""
    num = markov_poly(g)
    den = markov_denominator(g)
    for _ in range(points):
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        a = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        b = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        pt = {"x": x, "a": a, "b": b}
        if num.eval(pt) != den.eval(pt) * markov_value(g, x, a, b):
            return False
    return True


def check_complete_y_degree(g: Digraph) -> bool:
    try:
        return eta_complete(g).degree("y") <= 1
    except ArithmeticError:
        return False


# -- a runnable suite ------------------------------------------------------------


@dataclass
class SuiteResult:
    lines: list[tuple[str, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(passed == total for _, passed, total in self.lines)

    def text(self) -> str:
        return "\n".join(f"{'PASS' if p == t else 'FAIL'} {name}: {p}/{t}" for name, p, t in self.lines)


def run_identity_suite(seed: int, trials: int) -> SuiteResult:
    """Randomized check of every identity family; fully determined by ``seed``."""
    rng = random.Random(seed)
    res = SuiteResult()

    def family(name: str, make: Callable[[], bool]) -> None:
        passed = sum(1 for _ in range(trials) if make())
        res.lines.append((name, passed, trials))

    closed = [check_closed_forms(random_reciprocal_digraph(rng)) for _ in range(trials)]
    res.lines.append(("reversing closed form", sum(r for r, _ in closed), trials))
    res.lines.append(("outgoing closed form", sum(o for _, o in closed), trials))
    family("B-matrix algebra", lambda: check_b_algebra(random_reciprocal_digraph(rng)))
    family("walk series", lambda: check_walk_series(random_reciprocal_digraph(rng, 3, 3), 5))
    family("Ihara determinant", lambda: check_ihara(random_connected_graph(rng, rng.randint(2, 5))))
    family("invasion formula", lambda: check_invasion(
        random_invader(rng), random_digraph(rng, rng.randint(1, 4), loops=True, max_mult=2)))
    family("Markov identity", lambda: check_markov(random_graph(rng, rng.randint(1, 6)), rng, 3))
    family("complete polynomial y-degree", lambda: check_complete_y_degree(
        random_simple_digraph(rng, rng.randint(1, 5))))
    return res


__all__ = [
    "random_digraph", "random_simple_digraph", "random_graph", "random_connected_graph",
    "random_reciprocal_digraph", "random_invader", "check_closed_forms", "check_b_algebra",
    "check_walk_series", "check_ihara", "check_invasion", "check_markov",
    "check_complete_y_degree", "run_identity_suite", "SuiteResult",
]
