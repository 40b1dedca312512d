"""Exhaustive search for zeta-equivalent, non-isomorphic small digraphs and graphs.

Isomorphism classes on n vertices are grown from the classes on n - 1 vertices
by attaching one new vertex in every possible way and keeping canonical forms.
Classes are bucketed by a two-point modular fingerprint of eta (eta-bar for
graphs) and candidate buckets are confirmed by exact polynomial equality.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .charpoly import eta, eta_bar
from .graphs import Digraph, GraphError, canonical_form
from .poly import FINGERPRINT_PRIME, Poly, combine_values, det_mod, fingerprint_points

log = logging.getLogger(__name__)

MAX_N = {"graph": 7, "digraph": 5}
MODES = tuple(MAX_N)


@dataclass(frozen=True)
class SearchConfig:
    n: int
    mode: str = "digraph"
    connected: bool = False
    seed: int = 0
    workers: int = 1

    def __post_init__(self) -> None:
        if self.mode not in MAX_N:
            raise ValueError(f"mode must be one of {MODES}")
        if not 1 <= self.n <= MAX_N[self.mode]:
            raise GraphError(f"exhaustive {self.mode} search is capped at n <= {MAX_N[self.mode]}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class EquivalenceClass:
    members: tuple[Digraph, ...]
    polynomial: Poly


@dataclass(frozen=True)
class EquivalenceClassReport:
    config: SearchConfig
    classes: tuple[EquivalenceClass, ...]
    searched: int

    def to_text(self) -> str:
        from .formats import format_digraph

        c = self.config
        kind = "connected" if c.connected else "all"
        out = [f"# search mode={c.mode} n={c.n} filter={kind} seed={c.seed}",
               f"# isomorphism classes searched: {self.searched}",
               f"# zeta-equivalence classes of size >= 2: {len(self.classes)}"]
        for k, cls in enumerate(self.classes, 1):
            out.append("")
            out.append(f"class {k} ({len(cls.members)} members)")
            out.append(f"eta: {cls.polynomial.to_text()}")
            for g in cls.members:
                out.append(format_digraph(g).rstrip("\n"))
                out.append("--")
            out.pop()
        return "\n".join(out) + "\n"


# -- enumeration ---------------------------------------------------------------


def _key(g: Digraph) -> tuple[int, ...]:
    return tuple(v for row in g.adj for v in row)


def _extensions(parent: Digraph, graph: bool) -> Iterator[Digraph]:
    """All simple (di)graphs obtained by adding vertex n - 1 to ``parent``."""
    n = parent.n + 1
    base = [list(row) + [0] for row in parent.adj] + [[0] * n]
    k = n - 1
    if graph:
        choices: Iterable = ((s, s) for s in itertools.product((0, 1), repeat=k))
    else:
        choices = itertools.product(itertools.product((0, 1), repeat=k), repeat=2)
    for out, into in choices:
        adj = [row[:] for row in base]
        for i in range(k):
            adj[k][i] = out[i]
            adj[i][k] = into[i]
        yield Digraph.from_matrix(adj)


def _grow(parents: Sequence[Digraph], graph: bool) -> list[Digraph]:
    seen: dict[tuple[int, ...], Digraph] = {}
    for p in parents:
        for g in _extensions(p, graph):
            f = canonical_form(g)
            seen.setdefault(_key(f), f)
    return list(seen.values())


def isomorphism_classes(n: int, mode: str = "digraph", workers: int = 1) -> list[Digraph]:
    """One canonical representative per isomorphism class, sorted by adjacency."""
    graph = mode == "graph"
    level = [Digraph.empty(1)] if n >= 1 else [Digraph.empty(0)]
    for _ in range(1, n):
        if workers > 1 and len(level) >= 2 * workers:
            chunks = [level[i::workers] for i in range(workers)]
            with ProcessPoolExecutor(workers) as pool:
                parts = list(pool.map(_grow, chunks, [graph] * workers))
            merged: dict[tuple[int, ...], Digraph] = {}
            for part in parts:
                for g in part:
                    merged.setdefault(_key(g), g)
            level = list(merged.values())
        else:
            level = _grow(level, graph)
        level.sort(key=_key)
    return level


def enumerate_classes(config: SearchConfig) -> list[Digraph]:
    reps = isomorphism_classes(config.n, config.mode, config.workers)
    if config.connected:
        reps = [g for g in reps if g.is_weakly_connected()]
    return reps


# -- fingerprints -------------------------------------------------------------


def eta_fingerprint(g: Digraph, seed: int, mode: str = "digraph") -> int:
    """fingerprint(eta(g), seed) computed by modular determinants."""
    p = FINGERPRINT_PRIME
    n = g.n
    dout, din = g.out_degrees(), g.in_degrees()
    vals = []
    for pt in fingerprint_points(seed, 2):
        x, tu, uu = pt["x"], pt["tu"], pt["uu"]
        td, ud = (0, 0) if mode == "graph" else (pt["td"], pt["ud"])
        m = [[(uu * g.adj[i][j] + ud * g.adj[j][i] + (x + tu * dout[i] + td * din[i] if i == j else 0)) % p
              for j in range(n)] for i in range(n)]
        vals.append(det_mod(m, p))
    return combine_values(vals)


def exact_polynomial(g: Digraph, mode: str) -> Poly:
    return eta_bar(g) if mode == "graph" else eta(g)


def mine_pairs(config: SearchConfig, reps: Sequence[Digraph] | None = None) -> EquivalenceClassReport:
    """Group classes by fingerprint, then confirm each bucket exactly."""
    if reps is None:
        reps = enumerate_classes(config)
    buckets: dict[int, list[Digraph]] = {}
    for g in reps:
        buckets.setdefault(eta_fingerprint(g, config.seed, config.mode), []).append(g)
    found = []
    for fp in sorted(buckets):
        group = buckets[fp]
        if len(group) < 2:
            continue
        by_poly: dict[Poly, list[Digraph]] = {}
        for g in group:
            by_poly.setdefault(exact_polynomial(g, config.mode), []).append(g)
        for poly, members in by_poly.items():
            if len(members) >= 2:
                members.sort(key=_key)
                found.append(EquivalenceClass(tuple(members), poly))
    found.sort(key=lambda c: _key(c.members[0]))
    log.info("searched %d classes, %d zeta-equivalence classes", len(reps), len(found))
    return EquivalenceClassReport(config, tuple(found), len(reps))


def mine_pairs_exact(config: SearchConfig, reps: Sequence[Digraph] | None = None) -> list[EquivalenceClass]:
    """All-pairs exact comparison without fingerprints (reference method)."""
    if reps is None:
        reps = enumerate_classes(config)
    by_poly: dict[Poly, list[Digraph]] = {}
    for g in reps:
        by_poly.setdefault(exact_polynomial(g, config.mode), []).append(g)
    out = [EquivalenceClass(tuple(sorted(m, key=_key)), p) for p, m in by_poly.items() if len(m) >= 2]
    out.sort(key=lambda c: _key(c.members[0]))
    return out
