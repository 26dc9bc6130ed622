"""Immutable simple graphs and the vertex/edge surgeries the lemmas need.

Vertices are dense integers ``0..n-1`` and adjacency is kept as one bitmask
per vertex, which is what every search in this package indexes against.
Original vertex identities survive relabeling operations through the
``labels`` tuple, so a surgered or induced graph can always be mapped back
to the graph it came from.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidSurgery, InvalidVertex, SelfLoopRejected, TooLarge

CANONICAL_LIMIT_DEFAULT = 10


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Instances are value-like: equality and hashing look only at the vertex
    count and the edge set, never at labels.  All operations in this module
    return new graphs; nothing is ever mutated after construction.
    """

    __slots__ = ("n", "labels", "_adj", "_edges")

    def __init__(self, n: int, adj_masks: Sequence[int], labels: tuple | None = None):
        self.n = n
        self._adj = tuple(adj_masks)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise InvalidVertex(f"labels has {len(labels)} entries for {n} vertices")
        self.labels = labels
        edges = []
        for v in range(n):
            mask = self._adj[v] >> (v + 1)
            u = v + 1
            while mask:
                if mask & 1:
                    edges.append((v, u))
                mask >>= 1
                u += 1
        self._edges = tuple(edges)

    # -- basic accessors ---------------------------------------------------

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adj_mask(self, v: int) -> int:
        """Bitmask of the neighbors of ``v``."""
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def label_of(self, v: int):
        """Original identity of ``v`` (its own index when no labels are kept)."""
        return v if self.labels is None else self.labels[v]

    def is_connected(self) -> bool:
        """True for the empty graph and for any graph with one reachable part."""
        if self.n == 0:
            return True
        return _reach(self._adj, 1) == self.full_mask

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"


# -- construction ...........................................................


def from_edges(n: int, edges: Iterable[Sequence[int]], labels: tuple | None = None) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse silently."""
    if n < 0:
        raise InvalidVertex(f"negative vertex count {n}")
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoopRejected(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, labels)


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of ``g``."""
    full = g.full_mask
    adj = [(full ^ g.adj_mask(v)) & ~(1 << v) for v in range(g.n)]
    return Graph(g.n, adj, g.labels)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Place ``g2`` after ``g1`` on a fresh vertex range."""
    adj = list(g1._adj) + [m << g1.n for m in g2._adj]
    labels = None
    if g1.labels is not None or g2.labels is not None:
        labels = tuple(g1.label_of(v) for v in range(g1.n)) + tuple(
            g2.label_of(v) for v in range(g2.n)
        )
    return Graph(g1.n + g2.n, adj, labels)


# -- surgeries ...............................................................


@dataclass(frozen=True)
class DeleteVertex:
    """Remove a vertex and its incident edges."""

    vertex: int


@dataclass(frozen=True)
class CloseVertex:
    """Remove the closed neighborhood of a vertex."""

    vertex: int


@dataclass(frozen=True)
class DeleteEdge:
    """Remove an edge; both endpoints remain."""

    edge: tuple[int, int]


@dataclass(frozen=True)
class CloseEdge:
    """Remove the union of both endpoints' closed neighborhoods."""

    edge: tuple[int, int]


SurgeryKind = DeleteVertex | CloseVertex | DeleteEdge | CloseEdge


def apply_surgery(g: Graph, surgery: SurgeryKind) -> Graph:
    """Apply one surgery, returning a new graph labeled by source vertices."""
    match surgery:
        case DeleteVertex(vertex=v):
            _check_vertex(g, v)
            return _drop_vertices(g, 1 << v)
        case CloseVertex(vertex=v):
            _check_vertex(g, v)
            return _drop_vertices(g, g.adj_mask(v) | 1 << v)
        case DeleteEdge(edge=e):
            u, v = _check_edge(g, e)
            adj = list(g._adj)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            return Graph(g.n, adj, g.labels)
        case CloseEdge(edge=e):
            u, v = _check_edge(g, e)
            drop = g.adj_mask(u) | g.adj_mask(v) | 1 << u | 1 << v
            return _drop_vertices(g, drop)
    raise InvalidSurgery(f"unknown surgery {surgery!r}")


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Restrict ``g`` to a vertex subset, keeping only edges inside it."""
    keep = 0
    for v in vertices:
        if not (0 <= v < g.n):
            raise InvalidVertex(f"vertex {v} outside 0..{g.n - 1}")
        keep |= 1 << v
    return _drop_vertices(g, g.full_mask ^ keep)


def components(g: Graph) -> list[tuple[tuple[int, ...], Graph]]:
    """Connected components as ``(original vertices, component graph)`` pairs.

    The vertex tuples partition ``0..n-1``; each component graph is relabeled
    to a dense range and carries the original identities in its labels.
    """
    out = []
    seen = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        mask = _reach(g._adj, 1 << v)
        seen |= mask
        verts = tuple(_bits(mask))
        out.append((verts, _drop_vertices(g, g.full_mask ^ mask)))
    return out


def canonical_form(g: Graph, limit: int = CANONICAL_LIMIT_DEFAULT) -> bytes:
    """Canonical byte string: equal strings exactly when graphs are isomorphic.

    Defined as the lexicographically minimal upper-triangle bit string over
    all vertex orders, the bits taken in column order x(0,1), x(0,2),
    x(1,2), x(0,3), ...  Found by placing vertices one position at a time
    and pruning any placement whose bit prefix already exceeds the best.
    """
    n = g.n
    if n > limit:
        raise TooLarge(f"canonical_form capped at {limit} vertices, got {n}")
    if n <= 1:
        return bytes([n])

    adj = g._adj
    # Identity ordering seeds the bound; a dummy leading column keeps the
    # column list aligned with placement positions (position 0 adds no bits).
    best = [0] + _columns_for(adj, list(range(n)))

    placed = [0] * n

    def descend(pos: int, used: int, cols: list[int]) -> None:
        nonlocal best
        if pos == n:
            if cols < best:
                best = list(cols)
            return
        candidates = []
        for v in range(n):
            if used >> v & 1:
                continue
            col = 0
            av = adj[v]
            for i in range(pos):
                col = col << 1 | (av >> placed[i] & 1)
            candidates.append((col, v))
        candidates.sort()
        for col, v in candidates:
            # Compare prefix against the current best before descending.
            keep = True
            for i in range(pos):
                if cols[i] != best[i]:
                    keep = cols[i] < best[i]
                    break
            else:
                keep = col <= best[pos]
            if not keep:
                continue
            placed[pos] = v
            cols.append(col)
            descend(pos + 1, used | 1 << v, cols)
            cols.pop()

    descend(0, 0, [])
    return bytes([n]) + _pack_columns(n, best[1:])


def graph_of_canonical_form(data: bytes) -> Graph:
    """Rebuild the canonically labeled graph a canonical form encodes."""
    if not data:
        raise InvalidVertex("empty canonical form")
    n = data[0]
    bits = data[1:]
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos >> 3] >> (7 - (pos & 7)) & 1:
                edges.append((i, j))
            pos += 1
    return from_edges(n, edges)


# -- internals ...............................................................


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reach(adj: Sequence[int], start_mask: int) -> int:
    seen = start_mask
    frontier = start_mask
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _drop_vertices(g: Graph, drop_mask: int) -> Graph:
    keep = [v for v in range(g.n) if not (drop_mask >> v & 1)]
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for v in keep:
        mask = g.adj_mask(v) & ~drop_mask
        for u in _bits(mask):
            adj[index[v]] |= 1 << index[u]
    labels = tuple(g.label_of(v) for v in keep)
    return Graph(len(keep), adj, labels)


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise InvalidSurgery(f"vertex {v} not in graph on {g.n} vertices")


def _check_edge(g: Graph, e: Sequence[int]) -> tuple[int, int]:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise InvalidSurgery(f"edge {(u, v)} not present")
    return (u, v) if u < v else (v, u)


def _columns_for(adj: Sequence[int], order: list[int]) -> list[int]:
    cols = []
    for j in range(1, len(order)):
        col = 0
        aj = adj[order[j]]
        for i in range(j):
            col = col << 1 | (aj >> order[i] & 1)
        cols.append(col)
    return cols


def _pack_columns(n: int, cols: list[int]) -> bytes:
    bits = []
    for j in range(1, n):
        col = cols[j - 1]
        for i in range(j - 1, -1, -1):
            bits.append(col >> i & 1)
    out = bytearray()
    for i in range(0, len(bits), 8):
        byte = 0
        for b in bits[i : i + 8]:
            byte = byte << 1 | b
        byte <<= 8 - len(bits[i : i + 8])
        out.append(byte)
    return bytes(out)
