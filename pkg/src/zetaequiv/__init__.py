"""Zeta-equivalent digraphs.

Exact tools for the generalized characteristic polynomial eta of a digraph,
the zeta function of its bidirectional digraph, invasions, switchings, and an
exhaustive search for small zeta-equivalent pairs.
"""

from .charpoly import eta, eta_bar, eta_complete, zeta_equivalent_digraphs, zeta_equivalent_graphs
from .graphs import Digraph, GraphError, WeightedDigraph, build, canonical_form, is_isomorphic
from .poly import Poly, parse_poly
from .zeta import zeta_inverse

__version__ = "0.1.0"

__all__ = [
    "Digraph", "WeightedDigraph", "GraphError", "Poly", "build", "canonical_form", "eta", "eta_bar",
    "eta_complete", "is_isomorphic", "parse_poly", "zeta_equivalent_digraphs", "zeta_equivalent_graphs",
    "zeta_inverse",
]
