"""Switchings that preserve zeta-equivalence of a digraph and of its complement.

A partition V_1..V_p, V_1'..V_p', W_1..W_q, X of the vertex set, together with
an isomorphism phi: V -> V', lets every x in X swap its half-linked
neighbourhoods in V_i + V_i' and in W_k.  The result is conjugated to the
original by Q + tR, which certifies equality of the complete polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .charpoly import generalized_laplacian
from .graphs import Digraph, GraphError
from .poly import ONE, ZERO, Poly, det_fraction_free, mat_mul, mat_sub

Block = tuple[int, ...]


@dataclass(frozen=True)
class SwitchingPartition:
    """Vertex blocks (0-based).  ``phi`` maps every vertex of V onto V'."""

    n: int
    v: tuple[Block, ...]
    v_prime: tuple[Block, ...]
    w: tuple[Block, ...] = ()
    x: Block = ()
    phi: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        seen: list[int] = []
        for b in (*self.v, *self.v_prime, *self.w, self.x):
            seen.extend(b)
        if len(seen) != len(set(seen)):
            raise GraphError("partition blocks overlap")
        if sorted(seen) != list(range(self.n)):
            missing = sorted(set(range(self.n)) - set(seen))
            raise GraphError(f"partition does not cover the vertex set (missing {missing})")
        if len(self.v) != len(self.v_prime):
            raise GraphError("V and V' need the same number of blocks")
        for i, (a, b) in enumerate(zip(self.v, self.v_prime)):
            if len(a) != len(b):
                raise GraphError(f"|V{i + 1}| != |V{i + 1}'|")

    def phi_problems(self) -> list[str]:
        out = []
        for i, (a, b) in enumerate(zip(self.v, self.v_prime)):
            missing = [u + 1 for u in a if u not in self.phi]
            if missing:
                out.append(f"phi undefined on {missing}")
            elif sorted(self.phi[u] for u in a) != sorted(b):
                out.append(f"phi does not map V{i + 1} onto V{i + 1}'")
        return out

    @property
    def all_v(self) -> list[int]:
        return [u for b in self.v for u in b]

    def paired_blocks(self) -> list[tuple[Block, Block]]:
        """(V_i, phi(V_i)) with V_i' listed in phi order."""
        return [(b, tuple(self.phi[u] for u in b)) for b in self.v]

    def switch_blocks(self) -> list[Block]:
        return [a + b for a, b in self.paired_blocks()] + list(self.w)


# -- link predicates ----------------------------------------------------------


def edges_between(g: Digraph, src: Sequence[int], dst: Sequence[int]) -> int:
    return sum(g.adj[a][b] for a in src for b in dst)


def link_kind(g: Digraph, src: Sequence[int], dst: Sequence[int]) -> str | None:
    """'none', 'half' or 'full' if every vertex of src sends that share of edges to dst."""
    kinds = set()
    size = len(dst)
    for a in src:
        k = edges_between(g, (a,), dst)
        if k == 0:
            kinds.add("none")
        elif k == size:
            kinds.add("full")
        elif 2 * k == size:
            kinds.add("half")
        else:
            return None
    return kinds.pop() if len(kinds) == 1 else None


def _into_kind(g: Digraph, src: Sequence[int], dst: Sequence[int]) -> str | None:
    # each vertex of dst receives the same share from src
    return link_kind(g.transpose(), dst, src)


def is_equitable(g: Digraph, blocks: Sequence[Sequence[int]]) -> bool:
    for bi in blocks:
        for bj in blocks:
            if len({edges_between(g, (v,), bj) for v in bi}) > 1:
                return False
            if len({edges_between(g, bj, (v,)) for v in bi}) > 1:
                return False
    return True


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    deltas: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, cond: str, witness: str) -> None:
        self.violations.append(f"{cond}: {witness}")

    def __str__(self) -> str:
        if self.ok:
            return "valid partition"
        return "\n".join(["invalid partition"] + [f"  {v}" for v in self.violations])


def _name(kind: str, i: int, prime: bool = False) -> str:
    return f"{kind}{i + 1}{chr(39) if prime else ''}"


def validate_partition(g: Digraph, p: SwitchingPartition) -> ValidationReport:
    """Check every switching condition and report all violations."""
    if not g.is_simple():
        raise GraphError("switching needs a simple digraph")
    if g.n != p.n:
        raise GraphError(f"partition is for {p.n} vertices, digraph has {g.n}")
    rep = ValidationReport()
    for problem in p.phi_problems():
        rep.add("phi", problem)
    if not rep.ok:
        return rep
    X = p.x
    pairs = p.paired_blocks()

    # induced structure: equitable partitions and the isomorphism phi
    v_all = p.all_v
    for cond, blocks in (("equitable V", p.v), ("equitable V'", p.v_prime), ("equitable W", p.w)):
        sub = [u for b in blocks for u in b]
        pos = {u: k for k, u in enumerate(sub)}
        if blocks and not is_equitable(g.induced(sub), [[pos[u] for u in b] for b in blocks]):
            rep.add(cond, "induced partition is not equitable")
    for a in v_all:
        for b in v_all:
            if g.adj[a][b] != g.adj[p.phi[a]][p.phi[b]]:
                rep.add("phi isomorphism", f"edge {a + 1}->{b + 1} vs {p.phi[a] + 1}->{p.phi[b] + 1}")

    for i, (vi, vpi) in enumerate(pairs):
        for x in X:
            for cond, blk, prime in (("(1)", vi, False), ("(2)", vpi, True)):
                if link_kind(g, (x,), blk) not in ("none", "full"):
                    rep.add(cond, f"vertex {x + 1} -> {_name('V', i, prime)} is partial")
                if _into_kind(g, blk, (x,)) not in ("none", "full"):
                    rep.add(cond, f"{_name('V', i, prime)} -> vertex {x + 1} is partial")
        # (3) constant differences of X-degrees
        diffs_out = {edges_between(g, (b,), X) - edges_between(g, (a,), X) for a in vi for b in vpi}
        diffs_in = {edges_between(g, X, (b,)) - edges_between(g, X, (a,)) for a in vi for b in vpi}
        delta = edges_between(g, (vpi[0],), X) - edges_between(g, (vi[0],), X)
        if diffs_out != {delta} or diffs_in != {delta}:
            rep.add("(3)", f"X-degree differences on {_name('V', i)} are not a single constant")
        rep.deltas.append(delta)

    for k, wk in enumerate(p.w):
        for x in X:
            if link_kind(g, (x,), wk) is None:
                rep.add("(4)", f"vertex {x + 1} -> {_name('W', k)} not 0, 1/2 or all")
            if _into_kind(g, wk, (x,)) is None:
                rep.add("(4)", f"{_name('W', k)} -> vertex {x + 1} not 0, 1/2 or all")
        if len({edges_between(g, (w,), X) for w in wk}) > 1 or len({edges_between(g, X, (w,)) for w in wk}) > 1:
            rep.add("(5)", f"X-degrees vary on {_name('W', k)}")
        for i, (vi, vpi) in enumerate(pairs):
            both = vi + vpi
            if link_kind(g, both, wk) not in ("none", "full") or _into_kind(g, both, wk) not in ("none", "full"):
                rep.add("(6)", f"{_name('V', i)}+{_name('V', i, True)} -> {_name('W', k)} is partial")
            if link_kind(g, wk, both) not in ("none", "full") or _into_kind(g, wk, both) not in ("none", "full"):
                rep.add("(6)", f"{_name('W', k)} -> {_name('V', i)}+{_name('V', i, True)} is partial")

    for i, (vi, vpi) in enumerate(pairs):
        for a in vi:
            for b in vpi:
                want = int(p.phi[a] == b)
                if g.adj[a][b] != want or g.adj[b][a] != want:
                    rep.add("(7)", f"vertex {a + 1} and {b + 1} (phi({a + 1}) = {p.phi[a] + 1})")

    for i, (vi, vpi) in enumerate(pairs):
        for j, (vj, vpj) in enumerate(pairs):
            if i == j or not rep.deltas or len(rep.deltas) <= max(i, j):
                continue
            cross = (link_kind(g, vi, vpj), link_kind(g, vpi, vj))
            cross_in = (_into_kind(g, vi, vpj), _into_kind(g, vpi, vj))
            same = (link_kind(g, vi, vj), link_kind(g, vpi, vpj))
            same_in = (_into_kind(g, vi, vj), _into_kind(g, vpi, vpj))
            cross_ok = cross in (("none", "none"), ("full", "full")) and cross_in == cross
            if rep.deltas[i] != rep.deltas[j]:
                same_ok = same in (("none", "none"), ("full", "full")) and same_in == same
                if not (cross_ok and same_ok):
                    rep.add("(8)", f"{_name('V', i)}, {_name('V', j)} with different deltas")
            elif not cross_ok:
                inv = {b: a for a, b in p.phi.items()}
                half_ok = cross == ("half", "half") and cross_in[0] == "half" and all(
                    g.adj[a][b] != g.adj[p.phi[a]][inv[b]] for a in vi for b in vpj
                )
                if not half_ok:
                    rep.add("(8)", f"{_name('V', i)}, {_name('V', j)}: cross links are not of an allowed form")
    return rep


# -- switching and conjugators -----------------------------------------------


def perform_switching(g: Digraph, p: SwitchingPartition, *, check: bool = True) -> Digraph:
    """Switch every half-linked (x, block) and (block, x) pair, x in X."""
    rep = validate_partition(g, p)
    if not rep.ok:
        raise GraphError(str(rep))
    adj = [list(r) for r in g.adj]
    for blk in p.switch_blocks():
        for x in p.x:
            if 2 * edges_between(g, (x,), blk) == len(blk):
                for b in blk:
                    adj[x][b] = 1 - adj[x][b]
            if 2 * edges_between(g, blk, (x,)) == len(blk):
                for b in blk:
                    adj[b][x] = 1 - adj[b][x]
    out = Digraph.from_matrix(adj)
    if check:
        q = build_conjugators(g, p, deltas=rep.deltas).q
        if _rat_mul(_rat_mul(q, _int_rows(g)), q) != _int_rows(out):
            raise ArithmeticError("switched adjacency differs from Q A Q")
    return out


def q_block(n: int) -> list[list[Fraction]]:
    """Q_n = (2/n) J - I."""
    return [[Fraction(2, n) - (i == j) for j in range(n)] for i in range(n)]


def r_sym(n: int) -> list[list[Fraction]]:
    """R^sym_n = (2/n) J - 2 I."""
    return [[Fraction(2, n) - 2 * (i == j) for j in range(n)] for i in range(n)]


def r_block(n: int) -> list[list[Fraction]]:
    """R_{2n} = [[0, R^sym_n], [-R^sym_n, 0]]."""
    s = r_sym(n)
    zero = [Fraction(0)] * n
    return [zero + s[i] for i in range(n)] + [[-v for v in s[i]] + zero for i in range(n)]


@dataclass(frozen=True)
class ConjugatorPair:
    q: list[list[Fraction]]
    r: list[list[Fraction]]
    deltas: tuple[int, ...]


def build_conjugators(g: Digraph, p: SwitchingPartition, *,
                      deltas: Sequence[int] | None = None) -> ConjugatorPair:
    """Q and R in the original vertex numbering."""
    if deltas is None:
        rep = validate_partition(g, p)
        if not rep.ok:
            raise GraphError(str(rep))
        deltas = rep.deltas
    n = g.n
    q = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    r = [[Fraction(0)] * n for _ in range(n)]
    for blk in p.switch_blocks():
        qb = q_block(len(blk))
        for a, u in enumerate(blk):
            for b, v in enumerate(blk):
                q[u][v] = qb[a][b]
    for (vi, vpi), d in zip(p.paired_blocks(), deltas):
        blk = vi + vpi
        rb = r_block(len(vi))
        for a, u in enumerate(blk):
            for b, v in enumerate(blk):
                r[u][v] = Fraction(d, 4) * rb[a][b]
    return ConjugatorPair(q, r, tuple(deltas))


def _int_rows(g: Digraph) -> list[list[Fraction]]:
    return [[Fraction(v) for v in row] for row in g.adj]


def _rat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [[sum((a[i][l] * b[l][j] for l in range(k) if a[i][l]), Fraction(0)) for j in range(m)]
            for i in range(n)]


def _rat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _diag(vals: Sequence[int]) -> list[list[Fraction]]:
    n = len(vals)
    return [[Fraction(vals[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


# -- real roots of univariate polynomials ------------------------------------


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of coefficient lists (low degree first)."""
    a = list(a)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for k, c in enumerate(b):
            a[shift + k] -= f * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def count_real_roots(coeffs: Sequence[Fraction]) -> int:
    """Distinct real roots of a univariate polynomial via a Sturm sequence."""
    c = [Fraction(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if len(c) <= 1:
        return 0
    seq = [c, [k * v for k, v in enumerate(c)][1:]]
    while len(seq[-1]) > 1:
        r = _poly_rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-v for v in r])

    def changes(signs: list[int]) -> int:
        s = [v for v in signs if v]
        return sum(1 for a, b in zip(s, s[1:]) if a != b)

    def sign(v: Fraction) -> int:
        return (v > 0) - (v < 0)

    at_pos = [sign(q[-1]) for q in seq]
    at_neg = [sign(q[-1]) * (-1) ** (len(q) - 1) for q in seq]
    return changes(at_neg) - changes(at_pos)


# -- certificate ---------------------------------------------------------------


@dataclass
class Certificate:
    checks: list[tuple[str, bool]] = field(default_factory=list)
    determinant: Poly = ZERO

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.checks)

    def record(self, name: str, ok: bool) -> None:
        self.checks.append((name, ok))

    def summary(self) -> str:
        lines = [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in self.checks]
        lines.append(f"determinant = {self.determinant.to_text()}")
        return "\n".join(lines)


def certify(g: Digraph, h: Digraph, pair: ConjugatorPair, *, direct: bool = False) -> Certificate:
    """Check the conjugation identities relating G and its switching H exactly.

    With ``direct`` the complete polynomials of G and H are also compared.
    """
    cert = Certificate()
    q, r = pair.q, pair.r
    a_g, a_h = _int_rows(g), _int_rows(h)
    dout_g, dout_h = _diag(g.out_degrees()), _diag(h.out_degrees())
    din_g, din_h = _diag(g.in_degrees()), _diag(h.in_degrees())
    n = g.n
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    ones = [[Fraction(1)] * n for _ in range(n)]
    zero = [[Fraction(0)] * n for _ in range(n)]

    cert.record("Q = Q^T = Q^-1", q == [list(c) for c in zip(*q)] and _rat_mul(q, q) == ident)
    cert.record("R skew-symmetric", r == [[-v for v in c] for c in zip(*r)])
    cert.record("QJ = JQ = J", _rat_mul(q, ones) == ones and _rat_mul(ones, q) == ones)
    cert.record("RJ = JR = 0", _rat_mul(r, ones) == zero and _rat_mul(ones, r) == zero)
    cert.record("Q A_G Q = A_H", _rat_mul(_rat_mul(q, a_g), q) == a_h)
    cert.record("R Dout_G = Dout_H R", _rat_mul(r, dout_g) == _rat_mul(dout_h, r))
    cert.record("R Din_G = Din_H R", _rat_mul(r, din_g) == _rat_mul(din_h, r))
    ra = _rat_sub(_rat_mul(r, a_g), _rat_mul(a_h, r))
    qd_out = _rat_sub(_rat_mul(q, dout_g), _rat_mul(dout_h, q))
    qd_in = _rat_sub(_rat_mul(q, din_g), _rat_mul(din_h, q))
    neg = [[-v for v in row] for row in ra]
    cert.record("R A_G - A_H R = -(Q Dout_G - Dout_H Q)", neg == qd_out)
    cert.record("R A_G - A_H R = -(Q Din_G - Din_H Q)", neg == qd_in)

    t = Poly.var("t")
    conj = [[Poly.const(q[i][j]) + t * r[i][j] for j in range(n)] for i in range(n)]
    l_g = generalized_laplacian(g, y=True)
    l_h = generalized_laplacian(h, y=True)
    lhs = mat_sub(mat_mul(conj, l_g), mat_mul(l_h, conj))
    factor = t * (Poly.var("uu") + Poly.var("ud")) - Poly.var("tu") - Poly.var("td")
    rhs = [[factor * v for v in row] for row in ra]
    cert.record("(Q+tR) L_G - L_H (Q+tR) = (t(uu+ud) - (tu+td)) (R A_G - A_H R)", lhs == rhs)

    det = det_fraction_free(conj)
    cert.determinant = det
    coeffs = det.coefficients_in("t")
    top = max(coeffs) if coeffs else 0
    clist = [Fraction(coeffs[k].constant_term()) if k in coeffs else Fraction(0) for k in range(top + 1)]
    cert.record("det(Q + tR) has no real root", bool(det) and count_real_roots(clist) == 0)

    if direct:
        from .charpoly import eta_complete

        cert.record("complete polynomials equal", eta_complete(g) == eta_complete(h))
    return cert


# -- the 5x5 conjugator for the Fig. 1(a) pair ---------------------------------


FIG1A_DET_FACTORS = (
    "uu^5 - 2*uu^2*ud^3 - 1*td^2*uu*ud^2 + td*ud^4",
    "ud^5 - 2*uu^3*ud^2 - 1*tu^2*uu^2*ud + tu*uu^4",
)


def fig1a_conjugator() -> list[list[Poly]]:
    """The 5x5 polynomial matrix conjugating the generalized Laplacians of the Fig. 1(a) pair."""
    tu, td, uu, ud = (Poly.var(v) for v in ("tu", "td", "uu", "ud"))
    z = ZERO
    return [
        [uu * uu - td * ud, uu * ud, z, z, z],
        [ud * ud, uu * uu + td * ud, ud * ud, uu * ud, z],
        [z, ud * ud, uu * ud, uu * uu, z],
        [z, uu * ud, uu * uu, ud * ud + tu * uu, uu * uu],
        [z, z, z, uu * ud, ud * ud - uu * tu],
    ]


def verify_fig1a_conjugator() -> Certificate:
    from .figures import fig1a_pair
    from .poly import parse_poly

    left, right = fig1a_pair()
    m = fig1a_conjugator()
    l_left, l_right = generalized_laplacian(left), generalized_laplacian(right)
    cert = Certificate()
    cert.record("M L_G = L_G' M", mat_mul(m, l_left) == mat_mul(l_right, m))
    det = det_fraction_free(m)
    cert.determinant = det
    expected = ONE
    for f in FIG1A_DET_FACTORS:
        expected = expected * parse_poly(f)
    cert.record("det M = stated product", det == expected)
    singular = det.subs({"tu": 0, "td": 0, "ud": 0})
    cert.record("M singular at tu = td = ud = 0", det_fraction_free(
        [[e.subs({"tu": 0, "td": 0, "ud": 0}) for e in row] for row in m]) == ZERO and singular == ZERO)
    return cert
