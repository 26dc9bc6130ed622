"""Chordality recognition with certificates and the co-chordal cover number.

A graph is chordal when every cycle of length at least four has a chord,
equivalently when it admits a perfect elimination order.  The recognizer
runs lexicographic BFS and verifies the resulting order; on failure the
graph is peeled down to a vertex-minimal non-chordal subgraph, which is
necessarily a chordless cycle and serves as the refutation witness.

Co-chordality is chordality of the complement.  The co-chordal cover
number is found exactly by iterative deepening over the cover size,
assigning edges to parts in sorted order.  Because co-chordality is not
monotone under adding edges (a later edge can chord away an offending
cycle in the complement), a part that currently fails is only pruned when
some chordless cycle of its complement cannot be touched by any edge still
unassigned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import graph_core
from .errors import CapExceeded, NotApplicable
from .graph_core import Graph


@dataclass(frozen=True)
class ChordalityCertificate:
    """Verdict plus a checkable witness.

    ``elimination_order`` is a perfect elimination order when the verdict
    is positive; ``chordless_cycle`` lists the vertices of an induced cycle
    of length at least four when it is negative.
    """

    verdict: bool
    elimination_order: tuple[int, ...] | None = None
    chordless_cycle: tuple[int, ...] | None = None


@dataclass(frozen=True)
class CochordCover:
    """A certified edge cover by co-chordal subgraphs."""

    k: int
    parts: tuple[tuple[tuple[int, int], ...], ...]


def is_chordal(g: Graph) -> ChordalityCertificate:
    """Decide chordality; always returns a validating witness."""
    order = _lexbfs_order(g)
    elimination = tuple(reversed(order))
    if _verify_peo(g, elimination):
        return ChordalityCertificate(True, elimination_order=elimination)
    cycle = _find_chordless_cycle(g)
    return ChordalityCertificate(False, chordless_cycle=cycle)


def is_cochordal(g: Graph) -> ChordalityCertificate:
    """Chordality of the complement, with witnesses in g's own vertex ids."""
    return is_chordal(graph_core.complement(g))


def froberg_reg_two(g: Graph) -> bool:
    """True exactly when the edge ideal has regularity two.

    Holds if and only if the complement is chordal; requires at least one
    edge (an edgeless graph has no edge ideal to speak of).
    """
    if g.num_edges == 0:
        raise NotApplicable("regularity-two test needs at least one edge")
    return _chordal_verdict(graph_core.complement(g))


def cochord_number(g: Graph, cap: int = 4) -> CochordCover:
    """Minimum number of co-chordal subgraphs covering all edges, exactly.

    Iterative deepening over the cover size k; within one k, edges are
    assigned in lexicographic order to the lowest-index part or the first
    empty one, which prunes permutation-equivalent covers.  If the minimum
    exceeds ``cap``, a ``CapExceeded`` is raised carrying a greedy upper
    bound (a bound, never the answer).
    """
    if g.num_edges == 0:
        raise NotApplicable("co-chordal covers need at least one edge")
    if cap < 1:
        raise ValueError("cap must be at least 1")
    edges = g.edges
    m = len(edges)
    adj = [g.adj_mask(v) for v in range(g.n)]

    # Memoized co-chordality of edge subsets, evaluated on their support.
    verdict_memo: dict[int, tuple[bool, tuple[int, ...] | None]] = {}

    def part_status(edge_mask: int) -> tuple[bool, tuple[int, ...] | None]:
        hit = verdict_memo.get(edge_mask)
        if hit is not None:
            return hit
        sub = _subgraph_on_support(g, edges, edge_mask)
        comp = graph_core.complement(sub)
        if _chordal_verdict(comp):
            res: tuple[bool, tuple[int, ...] | None] = (True, None)
        else:
            cyc = _find_chordless_cycle(comp)
            res = (False, tuple(comp.label_of(v) for v in cyc))
        verdict_memo[edge_mask] = res
        return res

    for k in range(1, cap + 1):
        parts = [0] * k

        def assign(idx: int, used: int) -> bool:
            if idx == m:
                return all(p == 0 or part_status(p)[0] for p in parts)
            limit = min(used + 1, k)
            for p in range(limit):
                parts[p] |= 1 << idx
                ok, cycle = part_status(parts[p])
                if not ok:
                    # The part may still be repaired by a later edge that
                    # chords the offending complement cycle away.
                    fixable = any(
                        sum(1 for w in cycle if w in edges[future]) == 2
                        for future in range(idx + 1, m)
                    )
                    if not fixable:
                        parts[p] &= ~(1 << idx)
                        continue
                if assign(idx + 1, max(used, p + 1)):
                    return True
                parts[p] &= ~(1 << idx)
            return False

        if assign(0, 0):
            out = []
            for p in parts:
                if p:
                    out.append(tuple(edges[i] for i in range(m) if p >> i & 1))
            return CochordCover(len(out), tuple(out))

    raise CapExceeded(
        f"co-chordal cover number exceeds cap {cap}",
        best_bound=_greedy_star_cover_bound(g),
    )


def validate_cover(g: Graph, cover: CochordCover) -> bool:
    """Independent check: parts union to E(g) and each is co-chordal."""
    union = set()
    for part in cover.parts:
        for e in part:
            if e not in g.edges:
                return False
            union.add(e)
        mask = 0
        for i, e in enumerate(g.edges):
            if e in part:
                mask |= 1 << i
        sub = _subgraph_on_support(g, g.edges, mask)
        if not _chordal_verdict(graph_core.complement(sub)):
            return False
    return union == set(g.edges) and cover.k == len(cover.parts)


def validate_elimination_order(g: Graph, order: tuple[int, ...]) -> bool:
    """True when each vertex's later neighbors form a clique."""
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        for a, b in combinations(later, 2):
            if not g.has_edge(a, b):
                return False
    return True


def validate_chordless_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    """True when the vertices form an induced cycle of length >= 4."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i, v in enumerate(cycle):
        for j in range(i + 1, k):
            adjacent = g.has_edge(v, cycle[j])
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True


# -- internals ----------------------------------------------------------------


def _lexbfs_order(g: Graph) -> list[int]:
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    visited = [False] * n
    order = []
    for step in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best < 0 or labels[v] > labels[best]):
                best = v
        visited[best] = True
        order.append(best)
        for u in g.neighbors(best):
            if not visited[u]:
                labels[u].append(n - step)
    return order


def _verify_peo(g: Graph, order: tuple[int, ...]) -> bool:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for v in order:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if not later:
            continue
        w = min(later, key=lambda u: pos[u])
        wmask = g.adj_mask(w)
        for u in later:
            if u != w and not (wmask >> u & 1):
                return False
    return True


def _chordal_verdict(g: Graph) -> bool:
    return _verify_peo(g, tuple(reversed(_lexbfs_order(g))))


def _find_chordless_cycle(g: Graph) -> tuple[int, ...]:
    """A chordless cycle of length >= 4 in a non-chordal graph.

    Peels vertices while non-chordality survives; a vertex-minimal
    non-chordal graph is itself a chordless cycle.
    """
    h = Graph(g.n, [g.adj_mask(v) for v in range(g.n)], tuple(range(g.n)))
    changed = True
    while changed:
        changed = False
        for v in range(h.n):
            h2 = graph_core.apply_surgery(h, graph_core.DeleteVertex(v))
            if not _chordal_verdict(h2):
                h = h2
                changed = True
                break
    assert not _chordal_verdict(h)
    # h is 2-regular and connected: walk the unique cycle.
    walk = [0]
    prev = -1
    while True:
        nbrs = h.neighbors(walk[-1])
        nxt = nbrs[0] if nbrs[0] != prev else nbrs[1]
        if nxt == walk[0]:
            break
        prev = walk[-1]
        walk.append(nxt)
    return tuple(h.label_of(v) for v in walk)


def _subgraph_on_support(g: Graph, edges, edge_mask: int) -> Graph:
    support = 0
    chosen = []
    for i in range(edge_mask.bit_length()):
        if edge_mask >> i & 1:
            u, v = edges[i]
            support |= 1 << u | 1 << v
            chosen.append((u, v))
    verts = [v for v in range(g.n) if support >> v & 1]
    index = {v: i for i, v in enumerate(verts)}
    return graph_core.from_edges(
        len(verts),
        [(index[u], index[v]) for u, v in chosen],
        labels=tuple(verts),
    )


def _greedy_star_cover_bound(g: Graph) -> int:
    """Stars at a greedy vertex cover: each star is co-chordal."""
    remaining = set(g.edges)
    k = 0
    while remaining:
        counts: dict[int, int] = {}
        for u, v in remaining:
            counts[u] = counts.get(u, 0) + 1
            counts[v] = counts.get(v, 0) + 1
        center = max(sorted(counts), key=lambda v: counts[v])
        remaining = {e for e in remaining if center not in e}
        k += 1
    return k
