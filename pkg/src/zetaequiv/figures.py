"""The two zeta-equivalent pairs of Figure 1, with 1-based edge lists."""

from __future__ import annotations

from typing import Callable

from .graphs import Digraph, build
from .switching import SwitchingPartition

FIG1A_LEFT = [(1, 2), (3, 2), (2, 4), (4, 3), (4, 5)]
FIG1A_RIGHT = [(1, 2), (2, 3), (3, 4), (4, 2), (4, 5)]

# undirected edges shared by both 9-vertex graphs
FIG1B_COMMON = [
    (5, 3), (7, 2), (1, 8), (4, 6), (5, 1), (1, 2), (2, 6),
    (7, 3), (3, 4), (4, 8), (5, 7), (1, 3), (2, 4), (6, 8),
]
FIG1B_LEFT_APEX = (3, 4, 7, 8)
FIG1B_RIGHT_APEX = (1, 2, 5, 6)


def _undirected(n: int, edges) -> Digraph:
    return build(n, list(edges) + [(b, a) for a, b in edges], one_based=True)


def fig1a_pair() -> tuple[Digraph, Digraph]:
    return build(5, FIG1A_LEFT, one_based=True), build(5, FIG1A_RIGHT, one_based=True)


def fig1b_pair() -> tuple[Digraph, Digraph]:
    left = FIG1B_COMMON + [(9, v) for v in FIG1B_LEFT_APEX]
    right = FIG1B_COMMON + [(9, v) for v in FIG1B_RIGHT_APEX]
    return _undirected(9, left), _undirected(9, right)


def fig1b_partition(phi: Callable[[int], int] = lambda v: v + 2) -> SwitchingPartition:
    """V1={1,2}, V1'={3,4}, V2={5,6}, V2'={7,8}, X={9}; phi given on 1-based labels."""
    v = ((0, 1), (4, 5))
    vp = ((2, 3), (6, 7))
    return SwitchingPartition(9, v, vp, (), (8,), {a: phi(a + 1) - 1 for a in (0, 1, 4, 5)})
