"""Edge-level zeta machinery on the bidirectional digraph.

Every edge of a weighted digraph G gets an added reverse edge of reciprocal
weight.  Original edges have direction UP, added ones DOWN.  The zeta function
satisfies 1/zeta = det(I - M(t, u)) with M assembled from the weighted
edge-adjacency matrices C_d and bump matrices B_dd'.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .graphs import Digraph, GraphError, WeightedDigraph, weighted_views
from .poly import (
    ONE,
    ZERO,
    Poly,
    Rational,
    det_fraction_free,
    identity,
    mat_mul,
)

UP, DOWN = "u", "d"
DIRS = (UP, DOWN)

# t-variable for a bump from direction d to direction d'
BUMP_VAR = {(UP, UP): "tuu", (DOWN, DOWN): "tdd", (UP, DOWN): "tud", (DOWN, UP): "tdu"}
LENGTH_VAR = {UP: "uu", DOWN: "ud"}
ZETA_VARS = ("tuu", "tdd", "tud", "tdu", "uu", "ud")

SPECIALIZATIONS: dict[str, dict[str, int]] = {
    "full": {},
    "reversing": {"tuu": 1, "tdd": 1},
    "outgoing": {"tdd": 1, "tud": 1, "tdu": 1, "ud": 0},
    "ihara": {"tuu": 0, "tdd": 0, "tud": 0, "tdu": 0, "ud": 0},
}


@dataclass(frozen=True)
class Edge:
    tail: int
    head: int
    direction: str
    weight: Fraction


@dataclass
class BidirectionalEdgeSystem:
    n: int
    edges: list[Edge]
    C: dict[str, list[list[Fraction]]] = field(default_factory=dict)
    B: dict[tuple[str, str], list[list[Fraction]]] = field(default_factory=dict)
    T: list[list[int]] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.edges)

    def is_reverse(self, e: int, f: int) -> bool:
        a, b = self.edges[e], self.edges[f]
        return a.tail == b.head and a.head == b.tail


def lift(g: Digraph | WeightedDigraph) -> WeightedDigraph:
    if isinstance(g, WeightedDigraph):
        return g
    return WeightedDigraph.from_digraph(g)


def build_bidirectional(g: Digraph | WeightedDigraph) -> BidirectionalEdgeSystem:
    """Bidirectional edge system; each edge of G is followed by its added reverse."""
    g = lift(g)
    edges: list[Edge] = []
    for (i, j), w in g.weights:
        if i == j and w not in (1, -1):
            raise GraphError(f"loop at vertex {i} has weight {w}, expected +1 or -1")
        edges.append(Edge(i, j, UP, Fraction(w)))
        edges.append(Edge(j, i, DOWN, 1 / Fraction(w)))
    sys = BidirectionalEdgeSystem(g.n, edges)
    k = len(edges)
    zero = Fraction(0)
    for d in DIRS:
        sys.C[d] = [[edges[e].weight if edges[e].direction == d and edges[e].head == edges[f].tail else zero
                     for f in range(k)] for e in range(k)]
    for d in DIRS:
        for d2 in DIRS:
            sys.B[(d, d2)] = [[edges[e].weight
                               if edges[e].direction == d and edges[f].direction == d2 and sys.is_reverse(e, f)
                               else zero for f in range(k)] for e in range(k)]
    sys.T = [[int(edges[e].tail == v) for e in range(k)] for v in range(g.n)]
    return sys


def edge_matrix(sys: BidirectionalEdgeSystem, values: Mapping[str, Rational] | None = None) -> list[list[Poly]]:
    """M(t, u) with any variables in ``values`` already substituted."""
    values = dict(values or {})

    def sym(name: str) -> Poly:
        return Poly.const(values[name]) if name in values else Poly.var(name)

    k = sys.size
    out = [[ZERO] * k for _ in range(k)]
    for d in DIRS:
        u = sym(LENGTH_VAR[d])
        if not u:
            continue
        parts = [(ONE, sys.C[d])]
        for d2 in DIRS:
            parts.append((sym(BUMP_VAR[(d, d2)]) - 1, sys.B[(d, d2)]))
        for coeff, mat in parts:
            if not coeff:
                continue
            scaled = u * coeff
            for e in range(k):
                row = mat[e]
                for f in range(k):
                    if row[f]:
                        out[e][f] = out[e][f] + scaled * row[f]
    return out


def zeta_inverse(g: Digraph | WeightedDigraph, spec: str | Mapping[str, Rational] = "full") -> Poly:
    """1/zeta = det(I - M(t, u)); named specializations are applied first."""
    values = SPECIALIZATIONS[spec] if isinstance(spec, str) else spec
    sys = build_bidirectional(g)
    m = edge_matrix(sys, values)
    k = sys.size
    return det_fraction_free([[(ONE if e == f else ZERO) - m[e][f] for f in range(k)] for e in range(k)])


def _diag_poly(entries: Sequence[Rational]) -> list[list[Poly]]:
    n = len(entries)
    return [[Poly.const(entries[i]) if i == j else ZERO for j in range(n)] for i in range(n)]


def _require_reciprocal(g: WeightedDigraph) -> None:
    if not g.has_reciprocal_weights():
        raise GraphError("closed forms require reciprocal weights on mutually reverse edges")


def _times_power(base: Poly, d: Poly, exponent: int) -> Poly:
    if exponent >= 0:
        return base * d ** exponent
    return base.divexact(d ** (-exponent))


def zeta_closed_form_reversing(g: Digraph | WeightedDigraph) -> Poly:
    """Closed form of 1/zeta at tuu = tdd = 1, in (tud, tdu, uu, ud)."""
    g = lift(g)
    _require_reciprocal(g)
    views = weighted_views(g)
    sup = g.support()
    n, m = g.n, g.m
    uu, ud = Poly.var("uu"), Poly.var("ud")
    su = uu * (Poly.var("tud") - 1)
    sd = ud * (Poly.var("tdu") - 1)
    z = ONE - su * sd
    dout, din = sup.out_degrees(), sup.in_degrees()
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            e = -(uu * views.W[i][j]) - ud * views.W_star[i][j]
            if i == j:
                e = e + z - su * ud * dout[i] - sd * uu * din[i]
            row.append(e)
        mat.append(row)
    return _times_power(det_fraction_free(mat), z, m - n)


def zeta_closed_form_outgoing(g: Digraph | WeightedDigraph) -> Poly:
    """Closed form of 1/zeta at tdd = tud = tdu = 1, in (tuu, uu, ud)."""
    g = lift(g)
    _require_reciprocal(g)
    views = weighted_views(g)
    n = g.n
    uu, ud = Poly.var("uu"), Poly.var("ud")
    s = uu * (Poly.var("tuu") - 1)
    z = ONE - s * s
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            e = -(z * (uu * views.W[i][j] + ud * views.W_star[i][j]))
            e = e - s * s * uu * views.W_sym[i][j]
            if i == j:
                e = e + z - s * uu * views.D_sym[i][i]
            row.append(e)
        mat.append(row)
    base = det_fraction_free(mat) * (ONE - s) ** views.loops_plus * (ONE + s) ** views.loops_minus
    return _times_power(base, z, views.reverse_pairs - n)


def ihara_determinant(g: Digraph) -> Poly:
    """(1 - u^2)^(mbar - n) det(I - uA + u^2 (D - I)) in the variable uu."""
    if not g.is_graph() or not g.is_simple():
        raise GraphError("Ihara determinant needs a simple graph")
    n = g.n
    mbar = g.m // 2
    u = Poly.var("uu")
    deg = g.out_degrees()
    mat = [[(ONE - u * g.adj[i][j] if i == j else -(u * g.adj[i][j])) + (u * u * (deg[i] - 1) if i == j else ZERO)
            for j in range(n)] for i in range(n)]
    return _times_power(det_fraction_free(mat), ONE - u * u, mbar - n)


# -- walk-series oracle ---------------------------------------------------------


@dataclass(frozen=True)
class WalkTally:
    """tallies[k-1] sums w(gamma) * t^bumps * u^lengths over closed walks of length k."""

    length: int
    tallies: tuple[Poly, ...]

    def __getitem__(self, k: int) -> Poly:
        return self.tallies[k - 1]


_SLOT = {BUMP_VAR[(UP, UP)]: 0, BUMP_VAR[(DOWN, DOWN)]: 1, BUMP_VAR[(UP, DOWN)]: 2,
         BUMP_VAR[(DOWN, UP)]: 3, "uu": 4, "ud": 5}


def walk_series_oracle(g: Digraph | WeightedDigraph, length: int) -> WalkTally:
    """Enumerate closed walks of the bidirectional digraph up to ``length`` edges."""
    if length < 1:
        raise ValueError("length must be >= 1")
    sys = build_bidirectional(g)
    edges = sys.edges
    k = len(edges)
    succ = [[f for f in range(k) if edges[e].head == edges[f].tail] for e in range(k)]
    bump_slot = [[_SLOT[BUMP_VAR[(edges[e].direction, edges[f].direction)]] if sys.is_reverse(e, f) else -1
                  for f in range(k)] for e in range(k)]
    len_slot = [_SLOT[LENGTH_VAR[e.direction]] for e in edges]
    acc: list[dict[tuple[int, ...], Fraction]] = [dict() for _ in range(length)]

    def record(depth: int, counts: list[int], weight: Fraction, first: int, last: int) -> None:
        c = list(counts)
        b = bump_slot[last][first]
        if b >= 0:
            c[b] += 1
        key = tuple(c)
        bucket = acc[depth - 1]
        bucket[key] = bucket.get(key, 0) + weight

    def dfs(first: int, last: int, depth: int, counts: list[int], weight: Fraction) -> None:
        if edges[last].head == edges[first].tail:
            record(depth, counts, weight, first, last)
        if depth == length:
            return
        for f in succ[last]:
            b = bump_slot[last][f]
            if b >= 0:
                counts[b] += 1
            counts[len_slot[f]] += 1
            dfs(first, f, depth + 1, counts, weight * edges[f].weight)
            counts[len_slot[f]] -= 1
            if b >= 0:
                counts[b] -= 1

    for e in range(k):
        counts = [0] * 6
        counts[len_slot[e]] += 1
        dfs(e, e, 1, counts, edges[e].weight)

    names = ("tuu", "tdd", "tud", "tdu", "uu", "ud")
    tallies = tuple(
        Poly.from_terms(({n: c for n, c in zip(names, key) if c}, w) for key, w in bucket.items())
        for bucket in acc
    )
    return WalkTally(length, tallies)


def log_series_from_det(det_poly: Poly, order: int) -> list[Poly]:
    """Coefficients c_1..c_order of -log det(I - sM) as a series in s.

    M is linear in (uu, ud), so the s^k coefficient of det(I - sM) is the part
    of det(I - M) of joint degree k in (uu, ud).
    """
    parts = det_poly.homogeneous_parts(("uu", "ud"))
    p = [parts.get(k, ZERO) for k in range(order + 1)]
    if p[0] != ONE:
        raise ValueError("det(I - sM) must have constant term 1")
    logs: list[Poly] = [ZERO]
    for k in range(1, order + 1):
        acc = p[k] * k
        for j in range(1, k):
            acc = acc - logs[j] * j * p[k - j]
        logs.append(acc * Fraction(1, k))
    return [-c for c in logs[1:]]


def trace_powers(g: Digraph | WeightedDigraph, order: int) -> list[Poly]:
    """tr(M^k) for k = 1..order with the full symbolic M."""
    sys = build_bidirectional(g)
    m = edge_matrix(sys)
    out = []
    power = identity(sys.size)
    for _ in range(order):
        power = mat_mul(power, m)
        tr = ZERO
        for i in range(sys.size):
            tr = tr + power[i][i]
        out.append(tr)
    return out
