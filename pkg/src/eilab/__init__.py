"""Exact edge-ideal regularity toolkit for small graphs.

Decides, with certificates, when the regularity of a graph's edge ideal
attains the matching-number bound, and verifies the classification and its
supporting lemmas exhaustively against an independent homological oracle.
"""

from .graph_core import Graph, from_edges
from .regularity_oracle import FieldSpec, regularity

__all__ = ["Graph", "from_edges", "FieldSpec", "regularity"]
__version__ = "0.1.0"
