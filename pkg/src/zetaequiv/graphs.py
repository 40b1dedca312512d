"""Digraphs with edge multiplicities, weighted digraphs, and small-n isomorphism."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Matrix = tuple[tuple[int, ...], ...]

# cap on labelings tried by the canonical form (8! covers any 8-vertex digraph)
MAX_LABELINGS = 40320
AUTOMORPHISM_MAX_N = 9


class GraphError(ValueError):
    """Invalid graph input or an operation applied outside its domain."""


@dataclass(frozen=True)
class Digraph:
    """Unweighted digraph given by its matrix of edge multiplicities.

    ``adj[i][j]`` counts the edges i -> j; diagonal entries are loops.
    """

    adj: Matrix

    def __post_init__(self) -> None:
        n = len(self.adj)
        for row in self.adj:
            if len(row) != n:
                raise GraphError("adjacency matrix must be square")
            if any(v < 0 for v in row):
                raise GraphError("edge multiplicities must be non-negative")

    @classmethod
    def from_matrix(cls, rows: Iterable[Iterable[int]]) -> "Digraph":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def empty(cls, n: int) -> "Digraph":
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(map(sum, self.adj))

    def edges(self) -> list[tuple[int, int]]:
        """Edge list (0-based) in row-major order, repeated by multiplicity."""
        return [(i, j) for i, row in enumerate(self.adj) for j, k in enumerate(row) for _ in range(k)]

    def is_simple(self) -> bool:
        return all(v in (0, 1) for row in self.adj for v in row) and all(
            self.adj[i][i] == 0 for i in range(self.n)
        )

    def is_graph(self) -> bool:
        return all(self.adj[i][j] == self.adj[j][i] for i in range(self.n) for j in range(i))

    def transpose(self) -> "Digraph":
        return Digraph(tuple(zip(*self.adj)) if self.n else ())

    def out_degrees(self) -> list[int]:
        return [sum(row) for row in self.adj]

    def in_degrees(self) -> list[int]:
        return [sum(col) for col in zip(*self.adj)] if self.n else []

    def permute(self, perm: Sequence[int]) -> "Digraph":
        """Relabel vertex i as perm[i]."""
        n = self.n
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                out[perm[i]][perm[j]] = self.adj[i][j]
        return Digraph.from_matrix(out)

    def induced(self, vertices: Sequence[int]) -> "Digraph":
        return Digraph.from_matrix([[self.adj[i][j] for j in vertices] for i in vertices])

    def is_weakly_connected(self) -> bool:
        n = self.n
        if n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in range(n):
                if w not in seen and (self.adj[v][w] or self.adj[w][v]):
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    def to_numpy(self) -> np.ndarray:
        return np.array(self.adj, dtype=np.int64).reshape(self.n, self.n)


def build(n: int, edges: Iterable[tuple[int, int]], *, one_based: bool = False) -> Digraph:
    """Digraph on ``n`` vertices; repeated edges raise the multiplicity."""
    off = 1 if one_based else 0
    adj = [[0] * n for _ in range(n)]
    for u, v in edges:
        i, j = u - off, v - off
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        adj[i][j] += 1
    return Digraph.from_matrix(adj)


def degree_matrices(g: Digraph) -> tuple[list[list[int]], list[list[int]]]:
    """(D_out, D_in) as dense diagonal integer matrices."""
    n = g.n
    dout, din = g.out_degrees(), g.in_degrees()
    return (
        [[dout[i] if i == j else 0 for j in range(n)] for i in range(n)],
        [[din[i] if i == j else 0 for j in range(n)] for i in range(n)],
    )


def complement(g: Digraph) -> Digraph:
    if not g.is_simple():
        raise GraphError("complement is defined for simple digraphs only")
    n = g.n
    return Digraph.from_matrix([[int(i != j) - g.adj[i][j] for j in range(n)] for i in range(n)])


def refined_colors(g: Digraph) -> list[int]:
    """Isomorphism-invariant vertex colours from iterated neighbourhood refinement.

    Starts from the (out-degree, in-degree, loops) profile and splits colour
    classes by the colour multiset of out- and in-neighbours until stable.
    """
    n = g.n
    dout, din = g.out_degrees(), g.in_degrees()
    keys: list = [(-dout[i], -din[i], -g.adj[i][i]) for i in range(n)]
    colors: list[int] = []
    count = -1
    while True:
        ranks = {k: r for r, k in enumerate(sorted(set(keys)))}
        new = [ranks[k] for k in keys]
        if len(ranks) == count:
            return colors
        colors, count = new, len(ranks)
        keys = [
            (colors[v],
             tuple(sorted((colors[w], g.adj[v][w]) for w in range(n) if g.adj[v][w])),
             tuple(sorted((colors[w], g.adj[w][v]) for w in range(n) if g.adj[w][v])))
            for v in range(n)
        ]


def _candidate_perms(g: Digraph) -> np.ndarray:
    """Labelings listing vertices in increasing colour order.

    Returns an array P with P[k, new_position] = old_vertex.
    """
    n = g.n
    colors = refined_colors(g)
    order = sorted(range(n), key=lambda v: colors[v])
    cells = [list(grp) for _, grp in itertools.groupby(order, key=lambda v: colors[v])]
    total = math.prod(math.factorial(len(c)) for c in cells)
    if total > MAX_LABELINGS:
        raise GraphError(f"{total} candidate labelings exceed the limit of {MAX_LABELINGS}")
    per_cell = [list(itertools.permutations(c)) for c in cells]
    rows = [sum(choice, ()) for choice in itertools.product(*per_cell)]
    return np.array(rows, dtype=np.intp).reshape(len(rows), n)


def canonical_labeling(g: Digraph) -> tuple[Digraph, tuple[int, ...]]:
    """Canonical form and a labeling ``perm`` with ``g.permute(perm) == form``.

    The form minimizes the row-major adjacency string over all labelings that
    list vertices by increasing refined colour (see :func:`refined_colors`).
    """
    n = g.n
    if n == 0:
        return g, ()
    a = g.to_numpy()
    perms = _candidate_perms(g)
    flat = a[perms[:, :, None], perms[:, None, :]].reshape(len(perms), n * n)
    best = int(np.lexsort(flat.T[::-1])[0])
    order = perms[best]  # order[new] = old
    label = [0] * n
    for new, old in enumerate(order):
        label[int(old)] = new
    form = Digraph(tuple(tuple(int(v) for v in row) for row in flat[best].reshape(n, n)))
    return form, tuple(label)


def canonical_form(g: Digraph) -> Digraph:
    return canonical_labeling(g)[0]


def iso_check(g: Digraph, h: Digraph) -> tuple[int, ...] | None:
    """A permutation p with ``g.permute(p) == h``, or None if not isomorphic."""
    if g.n != h.n or g.m != h.m:
        return None
    fg, pg = canonical_labeling(g)
    fh, ph = canonical_labeling(h)
    if fg != fh:
        return None
    inv_h = [0] * h.n
    for v, lab in enumerate(ph):
        inv_h[lab] = v
    return tuple(inv_h[pg[v]] for v in range(g.n))


def is_isomorphic(g: Digraph, h: Digraph) -> bool:
    return iso_check(g, h) is not None


def automorphisms(g: Digraph) -> Iterable[tuple[int, ...]]:
    """All automorphisms by brute force (small n only)."""
    n = g.n
    if n > AUTOMORPHISM_MAX_N:
        raise GraphError(f"automorphism search supports n <= {AUTOMORPHISM_MAX_N}")
    dout, din = g.out_degrees(), g.in_degrees()
    for p in itertools.permutations(range(n)):
        if any(dout[i] != dout[p[i]] or din[i] != din[p[i]] for i in range(n)):
            continue
        if all(g.adj[i][j] == g.adj[p[i]][p[j]] for i in range(n) for j in range(n)):
            yield p


# -- weighted digraphs --------------------------------------------------------


@dataclass(frozen=True)
class WeightedDigraph:
    """Parallel-free digraph with nonzero rational edge weights."""

    n: int
    weights: tuple[tuple[tuple[int, int], Fraction], ...]

    def __post_init__(self) -> None:
        seen = set()
        for (i, j), w in self.weights:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise GraphError(f"edge ({i}, {j}) out of range for n={self.n}")
            if (i, j) in seen:
                raise GraphError(f"parallel edge ({i}, {j}) in weighted digraph")
            if w == 0:
                raise GraphError("edge weights must be nonzero")
            seen.add((i, j))

    @classmethod
    def from_dict(cls, n: int, weights: dict[tuple[int, int], object]) -> "WeightedDigraph":
        return cls(n, tuple(sorted(((e, Fraction(w)) for e, w in weights.items()))))

    @classmethod
    def from_digraph(cls, g: Digraph) -> "WeightedDigraph":
        """Unit weights; requires a parallel-free digraph."""
        if any(v > 1 for row in g.adj for v in row):
            raise GraphError("weighted digraphs cannot carry parallel edges")
        return cls.from_dict(g.n, {e: 1 for e in g.edges()})

    @property
    def m(self) -> int:
        return len(self.weights)

    def weight_map(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.weights)

    def support(self) -> Digraph:
        return build(self.n, [e for e, _ in self.weights])

    def has_reciprocal_weights(self) -> bool:
        w = self.weight_map()
        for (i, j), x in w.items():
            if (j, i) in w and w[(j, i)] * x != 1:
                return False
        return True


@dataclass(frozen=True)
class WeightedViews:
    W: list[list[Fraction]]
    W_star: list[list[Fraction]]
    A_sym: list[list[int]]
    W_sym: list[list[Fraction]]
    D_sym: list[list[int]]
    loops_plus: int
    loops_minus: int
    reverse_pairs: int


def weighted_views(g: WeightedDigraph) -> WeightedViews:
    n = g.n
    w = g.weight_map()
    W = [[w.get((i, j), Fraction(0)) for j in range(n)] for i in range(n)]
    A = [[int((i, j) in w) for j in range(n)] for i in range(n)]
    W_star = [[(1 / W[j][i]) if W[j][i] else Fraction(0) for j in range(n)] for i in range(n)]
    A_sym = [[A[i][j] * A[j][i] for j in range(n)] for i in range(n)]
    W_sym = [[A_sym[i][j] * W[i][j] for j in range(n)] for i in range(n)]
    D_sym = [[sum(A_sym[i]) if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        if A[i][i] and W[i][i] not in (1, -1):
            raise GraphError(f"loop at vertex {i} has weight {W[i][i]}, expected +1 or -1")
    tr_a = sum(A[i][i] for i in range(n))
    tr_w = sum(W[i][i] for i in range(n))
    loops_plus = int((tr_a + tr_w) / 2)
    loops_minus = int((tr_a - tr_w) / 2)
    tr_a2 = sum(A[i][k] * A[k][i] for i in range(n) for k in range(n))
    # unordered pairs of mutually reverse non-loop edges
    reverse_pairs = (tr_a2 - tr_a) // 2
    return WeightedViews(W, W_star, A_sym, W_sym, D_sym, loops_plus, loops_minus, reverse_pairs)
