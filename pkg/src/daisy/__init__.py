"""Workbench for daisy-free uniform hypergraphs: constructions over finite
geometries, certification with explicit witnesses, link-partition audits,
and exact extremal search at desk scale."""

__version__ = "0.1.0"

from .errors import CapExceeded, DaisyError, FormatError, UndecidedOverCap
from .gf import FiniteField, GFVector, field_make, field_of_order, is_prime_power, linearly_independent
from .hypergraph import DaisyPattern, Graph, Hypergraph, turan_graph_edges

__all__ = [
    "CapExceeded",
    "DaisyError",
    "DaisyPattern",
    "FiniteField",
    "FormatError",
    "GFVector",
    "Graph",
    "Hypergraph",
    "UndecidedOverCap",
    "__version__",
    "field_make",
    "field_of_order",
    "is_prime_power",
    "linearly_independent",
    "turan_graph_edges",
]
