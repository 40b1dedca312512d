"""Vertex-level polynomials: eta, eta-bar, the complete eta, and the Markov numerator."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .graphs import Digraph, GraphError
from .poly import ONE, ZERO, Poly, Rational, det_fraction_free

ETA_VARS = ("x", "tu", "td", "uu", "ud")
ETA_BAR_VARS = ("x", "tu", "uu")


def generalized_laplacian(g: Digraph, *, x: bool = True, y: bool = False,
                          names: Mapping[str, str] | None = None) -> list[list[Poly]]:
    """x I + y J + tu D_out + td D_in + uu A + ud A^T as a polynomial matrix.

    ``names`` renames the four matrix coefficients, e.g. {"td": None} drops one.
    """
    n = g.n
    names = dict({"tu": "tu", "td": "td", "uu": "uu", "ud": "ud"}, **(names or {}))
    dout, din = g.out_degrees(), g.in_degrees()

    def v(key: str) -> Poly:
        return Poly.var(names[key]) if names[key] else ZERO

    tu, td, uu, ud = v("tu"), v("td"), v("uu"), v("ud")
    xv = Poly.var("x") if x else ZERO
    yv = Poly.var("y") if y else ZERO
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e = yv + uu * g.adj[i][j] + ud * g.adj[j][i]
            if i == j:
                e = e + xv + tu * dout[i] + td * din[i]
            row.append(e)
        rows.append(row)
    return rows


def eta(g: Digraph) -> Poly:
    """det(xI + tu D_out + td D_in + uu A + ud A^T)."""
    return det_fraction_free(generalized_laplacian(g))


def _require_graph(g: Digraph) -> None:
    if not g.is_graph():
        raise GraphError("expected a graph (symmetric adjacency matrix)")


def eta_bar(g: Digraph) -> Poly:
    """det(xI + tu D + uu A) for a graph; variables (x, tu, uu)."""
    _require_graph(g)
    return det_fraction_free(generalized_laplacian(g, names={"td": "", "ud": ""}))


def eta_complete(g: Digraph) -> Poly:
    """det(xI + yJ + tu D_out + td D_in + uu A + ud A^T) for a simple digraph."""
    if not g.is_simple():
        raise GraphError("the complete polynomial is defined for simple digraphs")
    p = det_fraction_free(generalized_laplacian(g, y=True))
    if p.degree("y") > 1:
        raise ArithmeticError("complete polynomial has y-degree above one")
    return p


def markov_poly(g: Digraph) -> Poly:
    """f(a,b) * mu(x,a,b) = eta_bar(a + xa + xb, x, 1) in the variables (x, a, b).

    f(a, b) = det((a+b)I + D) clears the denominator of the lazy/deadly Markov
    chain function mu(x, a, b) = det(xI + ((a+b)I + D)^-1 (A + aI)).
    """
    _require_graph(g)
    x, a, b = Poly.var("x"), Poly.var("a"), Poly.var("b")
    return eta_bar(g).subs({"x": a + x * a + x * b, "tu": x, "uu": ONE})


def markov_denominator(g: Digraph) -> Poly:
    """f(a, b) = det((a + b) I + D)."""
    _require_graph(g)
    a, b = Poly.var("a"), Poly.var("b")
    out = ONE
    for d in g.out_degrees():
        out = out * (a + b + d)
    return out


def markov_value(g: Digraph, x: Rational, a: Rational, b: Rational) -> Fraction:
    """mu(x, a, b) evaluated directly from its defining rational matrix."""
    _require_graph(g)
    n = g.n
    deg = g.out_degrees()
    x, a, b = Fraction(x), Fraction(a), Fraction(b)
    rows = []
    for i in range(n):
        scale = 1 / (a + b + deg[i])
        rows.append([(x if i == j else 0) + scale * (g.adj[i][j] + (a if i == j else 0)) for j in range(n)])
    return Fraction(det_fraction_free(rows).constant_term())


def degree_sequence_from_eta_bar(p: Poly) -> list[int]:
    """Degrees of the source graph: the integer roots of p(x, -1, 0), descending."""
    q = p.subs({"tu": -1, "uu": 0})
    if q.variables() - {"x"}:
        raise ValueError("expected a polynomial in x, tu, uu")
    coeffs = q.coefficients_in("x")
    deg = max(coeffs) if coeffs else 0
    c = [Fraction(coeffs[k].constant_term()) if k in coeffs else Fraction(0) for k in range(deg + 1)]
    roots: list[int] = []
    r = 0
    while len(c) > 1:
        if r > deg - 1:
            raise ValueError("polynomial has a non-integer root; not from a graph")
        # synthetic division by (x - r)
        quo = [Fraction(0)] * (len(c) - 1)
        acc = Fraction(0)
        for k in range(len(c) - 1, 0, -1):
            acc = acc * r + c[k]
            quo[k - 1] = acc
        if acc * r + c[0] == 0:
            roots.append(r)
            c = quo
        else:
            r += 1
    if c[0] != 1:
        raise ValueError("polynomial is not monic in x")
    return sorted(roots, reverse=True)


def _check_pair(g: Digraph, h: Digraph, graphs: bool) -> None:
    if g.n != h.n:
        raise GraphError(f"size mismatch: {g.n} vs {h.n} vertices")
    for k in (g, h):
        if not k.is_simple():
            raise GraphError("zeta-equivalence is defined for simple inputs")
        if graphs and not k.is_graph():
            raise GraphError("expected graphs (symmetric adjacency)")


def zeta_equivalent_digraphs(g: Digraph, h: Digraph) -> bool:
    _check_pair(g, h, graphs=False)
    return eta(g) == eta(h)


def zeta_equivalent_graphs(g: Digraph, h: Digraph) -> bool:
    _check_pair(g, h, graphs=True)
    return eta_bar(g) == eta_bar(h)


def characteristic_polynomial(g: Digraph) -> Poly:
    """chi_G(x) = det(xI - A) via the specialization eta(x, 0, 0, -1, 0)."""
    return eta(g).subs({"tu": 0, "td": 0, "uu": -1, "ud": 0})


__all__ = [
    "ETA_VARS", "ETA_BAR_VARS", "generalized_laplacian", "eta", "eta_bar", "eta_complete",
    "markov_poly", "markov_denominator", "markov_value", "degree_sequence_from_eta_bar",
    "zeta_equivalent_digraphs", "zeta_equivalent_graphs", "characteristic_polynomial",
]
