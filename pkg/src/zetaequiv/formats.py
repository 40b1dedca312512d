"""Text formats: edge lists, invader files, and switching-partition files.

Edge list::

    n 5
    weighted        # optional
    1 2             # or "1 2 3/4" when weighted
    ...

Vertices are 1-based.  Repeated unweighted edges raise the multiplicity.
Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .graphs import Digraph, GraphError, WeightedDigraph, build
from .invasion import Invader
from .switching import SwitchingPartition


class FormatError(GraphError):
    """Malformed input text."""


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line.split()))
    return out


def _vertex(tok: str, n: int, lineno: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: bad vertex {tok!r}") from None
    if not 1 <= v <= n:
        raise FormatError(f"line {lineno}: vertex {v} out of range 1..{n}")
    return v - 1


def _parse_edge_lines(lines, *, extra: tuple[str, ...] = ()):
    if not lines or lines[0][1][0] != "n" or len(lines[0][1]) != 2:
        raise FormatError("first line must be 'n <N>'")
    try:
        n = int(lines[0][1][1])
    except ValueError:
        raise FormatError(f"bad vertex count {lines[0][1][1]!r}") from None
    if n < 0:
        raise FormatError("vertex count must be non-negative")
    weighted = False
    edges: list[tuple[int, int]] = []
    weights: dict[tuple[int, int], Fraction] = {}
    extras: list[tuple[int, list[str]]] = []
    for lineno, toks in lines[1:]:
        if toks == ["weighted"]:
            if edges or weights:
                raise FormatError(f"line {lineno}: 'weighted' must precede the edges")
            weighted = True
            continue
        if toks[0] in extra:
            extras.append((lineno, toks))
            continue
        if len(toks) not in (2, 3) or (len(toks) == 3) != weighted:
            raise FormatError(f"line {lineno}: expected 'u v'{' w' if weighted else ''}")
        u, v = _vertex(toks[0], n, lineno), _vertex(toks[1], n, lineno)
        if weighted:
            try:
                w = Fraction(toks[2])
            except (ValueError, ZeroDivisionError):
                raise FormatError(f"line {lineno}: bad weight {toks[2]!r}") from None
            if (u, v) in weights:
                raise FormatError(f"line {lineno}: repeated weighted edge")
            weights[(u, v)] = w
        else:
            edges.append((u, v))
    g = WeightedDigraph.from_dict(n, weights) if weighted else build(n, edges)
    return g, extras


def parse_graph(text: str) -> Digraph | WeightedDigraph:
    g, _ = _parse_edge_lines(_lines(text))
    return g


def parse_digraph(text: str) -> Digraph:
    g = parse_graph(text)
    if isinstance(g, WeightedDigraph):
        raise FormatError("expected an unweighted digraph")
    return g


def format_digraph(g: Digraph | WeightedDigraph) -> str:
    lines = [f"n {g.n}"]
    if isinstance(g, WeightedDigraph):
        lines.append("weighted")
        lines.extend(f"{i + 1} {j + 1} {w}" for (i, j), w in g.weights)
    else:
        lines.extend(f"{i + 1} {j + 1}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def parse_invader(text: str) -> Invader:
    g, extras = _parse_edge_lines(_lines(text), extra=("native",))
    if isinstance(g, WeightedDigraph):
        raise FormatError("invaders are unweighted")
    if len(extras) != 1 or len(extras[0][1]) != 3:
        raise FormatError("invader file needs exactly one line 'native <t> <h>'")
    lineno, toks = extras[0]
    t, h = _vertex(toks[1], g.n, lineno), _vertex(toks[2], g.n, lineno)
    return Invader.with_natives(g, t, h)


_BLOCK_RE = re.compile(r"^(V|W)(\d+)('?)$")


def parse_partition(text: str, n: int) -> SwitchingPartition:
    """Lines ``V1: 1 2``, ``V1': 3 4``, ``W1: 5 6``, ``X: 9``, ``phi: 1->3 2->4``."""
    v: dict[int, tuple[int, ...]] = {}
    vp: dict[int, tuple[int, ...]] = {}
    w: dict[int, tuple[int, ...]] = {}
    x: tuple[int, ...] = ()
    phi: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise FormatError(f"line {lineno}: expected '<block>: <vertices>'")
        head, body = (s.strip() for s in line.split(":", 1))
        toks = body.split()
        if head == "phi":
            for tok in toks:
                if "->" not in tok:
                    raise FormatError(f"line {lineno}: bad phi entry {tok!r}")
                a, b = tok.split("->", 1)
                phi[_vertex(a, n, lineno)] = _vertex(b, n, lineno)
            continue
        verts = tuple(_vertex(t, n, lineno) for t in toks)
        if head == "X":
            x = x + verts
            continue
        m = _BLOCK_RE.match(head)
        if not m:
            raise FormatError(f"line {lineno}: unknown block {head!r}")
        kind, idx, prime = m.group(1), int(m.group(2)), m.group(3)
        if kind == "W" and prime:
            raise FormatError(f"line {lineno}: W blocks have no primed version")
        target = w if kind == "W" else (vp if prime else v)
        if idx in target:
            raise FormatError(f"line {lineno}: block {head} given twice")
        target[idx] = verts

    def ordered(d: dict[int, tuple[int, ...]], name: str) -> tuple[tuple[int, ...], ...]:
        if sorted(d) != list(range(1, len(d) + 1)):
            raise FormatError(f"{name} blocks must be numbered 1..{len(d)}")
        return tuple(d[k] for k in sorted(d))

    return SwitchingPartition(n, ordered(v, "V"), ordered(vp, "V'"), ordered(w, "W"), x, phi)


def format_partition(p: SwitchingPartition) -> str:
    def verts(b) -> str:
        return " ".join(str(u + 1) for u in b)

    lines = []
    for i, (a, b) in enumerate(zip(p.v, p.v_prime), 1):
        lines.append(f"V{i}: {verts(a)}")
        lines.append(f"V{i}': {verts(b)}")
    lines.extend(f"W{k}: {verts(b)}" for k, b in enumerate(p.w, 1))
    lines.append(f"X: {verts(p.x)}")
    if p.phi:
        lines.append("phi: " + " ".join(f"{a + 1}->{b + 1}" for a, b in sorted(p.phi.items())))
    return "\n".join(lines) + "\n"


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
