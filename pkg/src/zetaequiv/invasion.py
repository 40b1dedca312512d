"""Invasions: replace every edge of a digraph by a copy of an invader S."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .graphs import Digraph, GraphError, automorphisms, build
from .poly import ONE, ZERO, Poly, adjugate_char_matrix, charpoly, det_fraction_free


@dataclass(frozen=True)
class InvasionPolynomials:
    chi_c: Poly
    p_tt: Poly
    p_th: Poly
    p_ht: Poly
    p_hh: Poly


@dataclass(frozen=True)
class Invader:
    """A digraph S with native vertices t (vertex 0) and h (vertex n_S - 1).

    Use :meth:`with_natives` to build one from a digraph whose natives sit elsewhere.
    """

    s: Digraph

    def __post_init__(self) -> None:
        if self.s.n < 2:
            raise GraphError("an invader needs at least two vertices")

    @classmethod
    def with_natives(cls, s: Digraph, t: int, h: int) -> "Invader":
        if t == h or not (0 <= t < s.n and 0 <= h < s.n):
            raise GraphError(f"invalid native vertices ({t}, {h})")
        core = [v for v in range(s.n) if v not in (t, h)]
        order = [t] + core + [h]
        perm = [0] * s.n
        for new, old in enumerate(order):
            perm[old] = new
        return cls(s.permute(perm))

    @classmethod
    def directed_path(cls, n_s: int) -> "Invader":
        return cls(build(n_s, [(i, i + 1) for i in range(n_s - 1)]))

    @classmethod
    def undirected_path(cls, n_s: int) -> "Invader":
        e = [(i, i + 1) for i in range(n_s - 1)]
        return cls(build(n_s, e + [(j, i) for i, j in e]))

    @classmethod
    def two_by_two(cls, tt: int, th: int, ht: int, hh: int) -> "Invader":
        return cls(Digraph.from_matrix([[tt, th], [ht, hh]]))

    @property
    def n_s(self) -> int:
        return self.s.n

    @property
    def n_c(self) -> int:
        return self.s.n - 2

    @property
    def t(self) -> int:
        return 0

    @property
    def h(self) -> int:
        return self.s.n - 1

    @property
    def core(self) -> list[list[int]]:
        return [list(row[1:-1]) for row in self.s.adj[1:-1]]

    def row_out(self, v: int) -> list[int]:
        """A_{v->}: edges from native v into the core."""
        return list(self.s.adj[v][1:-1])

    def col_in(self, v: int) -> list[int]:
        """A_{v<-}: edges from the core into native v."""
        return [self.s.adj[c][v] for c in range(1, self.s.n - 1)]

    def scalar(self, v: int, w: int) -> int:
        return self.s.adj[v][w]

    def is_symmetric(self) -> bool:
        """True if some automorphism of S swaps t and h."""
        t, h = self.t, self.h
        return any(p[t] == h and p[h] == t for p in automorphisms(self.s))

    @cached_property
    def polynomials(self) -> InvasionPolynomials:
        nc = self.n_c
        if nc == 0:
            return InvasionPolynomials(ONE, ZERO, ZERO, ZERO, ZERO)
        adj = adjugate_char_matrix(self.core)

        def p(v: int, w: int) -> Poly:
            a, b = self.row_out(v), self.col_in(w)
            out = ZERO
            for j in range(nc):
                if a[j]:
                    for k in range(nc):
                        if b[k]:
                            out = out + adj[j][k] * (a[j] * b[k])
            return out

        t, h = self.t, self.h
        return InvasionPolynomials(charpoly(self.core), p(t, t), p(t, h), p(h, t), p(h, h))


def invade(s: Invader, g: Digraph) -> Digraph:
    """S invading G: natives first, then one core block per edge of G in edge order."""
    n, nc = g.n, s.n_c
    edges = g.edges()
    size = n + len(edges) * nc
    adj = [[0] * size for _ in range(size)]
    t, h = s.t, s.h
    for v, w in edges:
        adj[v][v] += s.scalar(t, t)
        adj[w][w] += s.scalar(h, h)
        adj[v][w] += s.scalar(t, h)
        adj[w][v] += s.scalar(h, t)
    core = s.core
    for k, (v, w) in enumerate(edges):
        base = n + k * nc
        for j in range(nc):
            for l in range(nc):
                adj[base + j][base + l] = core[j][l]
        # a loop edge adds both native rows onto the same vertex
        for native, vertex in ((t, v), (h, w)):
            out, into = s.row_out(native), s.col_in(native)
            for j in range(nc):
                adj[vertex][base + j] += out[j]
                adj[base + j][vertex] += into[j]
    return Digraph.from_matrix(adj)


def _power_times(base: Poly, p: Poly, e: int) -> Poly:
    return base * p ** e if e >= 0 else base.divexact(p ** (-e))


def _native_det(chi_c: Poly, diag_terms, off_terms, g: Digraph) -> Poly:
    x = Poly.var("x")
    n = g.n
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            e = ZERO
            for coeff, m in off_terms:
                if m[i][j]:
                    e = e - coeff * m[i][j]
            if i == j:
                e = e + x * chi_c
                for coeff, d in diag_terms:
                    if d[i]:
                        e = e - coeff * d[i]
            row.append(e)
        mat.append(row)
    return det_fraction_free(mat)


def invasion_char_poly(s: Invader, g: Digraph) -> Poly:
    """chi of S invading G from chi_C and the four p-polynomials of S."""
    pp = s.polynomials
    c = pp.chi_c
    t, h = s.t, s.h
    k_tt = c * s.scalar(t, t) + pp.p_tt
    k_hh = c * s.scalar(h, h) + pp.p_hh
    k_th = c * s.scalar(t, h) + pp.p_th
    k_ht = c * s.scalar(h, t) + pp.p_ht
    a = [list(r) for r in g.adj]
    at = [list(r) for r in g.transpose().adj]
    det = _native_det(c, [(k_tt, g.out_degrees()), (k_hh, g.in_degrees())], [(k_th, a), (k_ht, at)], g)
    return _power_times(det, c, g.m - g.n)


def _require_symmetric_setting(s: Invader, g: Digraph) -> None:
    if not s.is_symmetric():
        raise GraphError("invader has no automorphism swapping its natives")
    if not g.is_graph() or any(g.adj[i][i] for i in range(g.n)):
        raise GraphError("symmetric invasion needs a loop-free graph")


def symmetric_invade(s: Invader, g: Digraph) -> Digraph:
    """Replace each undirected edge {v, w} (v < w) of G by one copy of S."""
    _require_symmetric_setting(s, g)
    half = build(g.n, [(v, w) for v, w in g.edges() if v < w])
    return invade(s, half)


def symmetric_invasion_char_poly(s: Invader, g: Digraph) -> Poly:
    _require_symmetric_setting(s, g)
    pp = s.polynomials
    c = pp.chi_c
    t, h = s.t, s.h
    k_d = c * s.scalar(t, t) + pp.p_tt
    k_a = c * s.scalar(t, h) + pp.p_th
    det = _native_det(c, [(k_d, g.out_degrees())], [(k_a, [list(r) for r in g.adj])], g)
    return _power_times(det, c, g.m // 2 - g.n)


def chebyshev_U(n: int) -> Poly:
    """Chebyshev polynomial of the second kind in x, with U_{-1} = 0."""
    if n < -1:
        raise ValueError("chebyshev_U needs n >= -1")
    x2 = Poly.var("x") * 2
    prev, cur = ZERO, ONE
    if n == -1:
        return prev
    for _ in range(n):
        prev, cur = cur, x2 * cur - prev
    return cur


def chebyshev_half(n: int) -> Poly:
    """U_n(x/2)."""
    return chebyshev_U(n).subs({"x": Poly.var("x") * Fraction(1, 2)})


def directed_path_formula(n_s: int, g: Digraph) -> Poly:
    """x^((n_S-2)(m-n)) chi_G(x^(n_S-1))."""
    x = Poly.var("x")
    chi = charpoly([list(r) for r in g.adj]).subs({"x": x ** (n_s - 1)})
    return _power_times(chi, x, (n_s - 2) * (g.m - g.n))


def undirected_path_formula(n_s: int, g: Digraph) -> Poly:
    """Chebyshev closed form for an undirected-path invader with n_S vertices."""
    u2, u3 = chebyshev_half(n_s - 2), chebyshev_half(n_s - 3)
    a = [list(r) for r in g.adj]
    at = [list(r) for r in g.transpose().adj]
    d = [o + i for o, i in zip(g.out_degrees(), g.in_degrees())]
    det = _native_det(u2, [(u3, d)], [(ONE, a), (ONE, at)], g)
    return _power_times(det, u2, g.m - g.n)


def symmetric_path_formula(n_s: int, g: Digraph) -> Poly:
    u2, u3 = chebyshev_half(n_s - 2), chebyshev_half(n_s - 3)
    det = _native_det(u2, [(u3, g.out_degrees())], [(ONE, [list(r) for r in g.adj])], g)
    return _power_times(det, u2, g.m // 2 - g.n)


def direct_char_poly(g: Digraph) -> Poly:
    return charpoly([list(r) for r in g.adj])
