"""The headline equivalence, decided from both sides independently.

For any graph, the regularity of its edge ideal reaches the upper bound
``matching number + 1`` exactly when every connected component is either a
pentagon or has equal matching and induced matching numbers.  ``classify``
evaluates the structural side (component shapes, no homology) and the
numeric side (homological oracle vs. matching number) separately and
reports both; a disagreement is surfaced as-is, never reconciled.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from . import cameron_walker, graph_core, matchings, regularity_oracle
from .errors import CapExceeded, NotApplicable, NotConnected
from .graph_core import Graph
from .regularity_oracle import FieldSpec


@dataclass(frozen=True)
class ClassificationVerdict:
    structural: bool
    numeric: bool
    characteristic: int
    component_shapes: tuple[str, ...]
    agreement: bool


def pentagon_test(g: Graph) -> bool:
    """True exactly for the 5-cycle: 5 vertices, 5 edges, 2-regular."""
    if g.n == 0 or not g.is_connected():
        raise NotConnected("pentagon test requires a connected, nonempty graph")
    return g.n == 5 and g.num_edges == 5 and all(g.degree(v) == 2 for v in range(5))


def contains_c5_subgraph(g: Graph) -> bool:
    """Whether some five vertices carry a 5-cycle (chords allowed)."""
    for sub in combinations(range(g.n), 5):
        for perm in permutations(sub[1:]):
            cycle = (sub[0],) + perm
            if all(g.has_edge(cycle[i], cycle[(i + 1) % 5]) for i in range(5)):
                return True
    return False


def component_shape(comp: Graph) -> str:
    """Shape tag for one connected component."""
    if pentagon_test(comp):
        return "pentagon"
    dec = cameron_walker.recognize_structural(comp)
    if not dec.verdict:
        return "not-cw"
    return {
        cameron_walker.Star: "star",
        cameron_walker.StarTriangle: "star-triangle",
        cameron_walker.BipartitePendant: "bipartite-pendant",
    }[type(dec.shape)]


def classify(
    g: Graph,
    field: FieldSpec = FieldSpec(0),
    oracle_cap: int = regularity_oracle.ORACLE_VERTEX_CAP,
) -> ClassificationVerdict:
    """Evaluate both sides of the equivalence on one graph.

    The structural side never needs the oracle, so when the oracle refuses
    (vertex cap) the raised error still carries it in ``structural``.
    """
    if g.n == 0:
        raise NotApplicable("classification needs at least one vertex")
    shapes = tuple(component_shape(comp) for _, comp in graph_core.components(g))
    structural = all(s in ("pentagon", "star", "star-triangle", "bipartite-pendant") for s in shapes)
    try:
        reg = regularity_oracle.regularity(g, field, cap=oracle_cap)
    except CapExceeded as exc:
        exc.structural = structural  # type: ignore[attr-defined]
        raise
    numeric = reg.reg_star == matchings.nu(g) + 1
    return ClassificationVerdict(
        structural=structural,
        numeric=numeric,
        characteristic=field.characteristic,
        component_shapes=shapes,
        agreement=structural == numeric,
    )
