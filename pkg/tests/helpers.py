"""Shared graph builders and independent brute-force oracles.

Everything here is deliberately written against the most naive definitions
(subset enumeration, dense Fraction elimination) with no code shared with
the package internals, so the tests exercise genuinely separate routes.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from eilab import graph_core
from eilab.graph_core import Graph


# -- builders -----------------------------------------------------------------


def cycle(k: int) -> Graph:
    return graph_core.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    return graph_core.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def complete(k: int) -> Graph:
    return graph_core.from_edges(k, list(combinations(range(k), 2)))


def star(leaves: int) -> Graph:
    return graph_core.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def edgeless(k: int) -> Graph:
    return graph_core.from_edges(k, [])


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Rebuild ``g`` with vertex ``v`` renamed to ``perm[v]``."""
    return graph_core.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


# -- brute-force matching oracles ----------------------------------------------


def _is_matching(edges) -> bool:
    used = set()
    for u, v in edges:
        if u in used or v in used:
            return False
        used.update((u, v))
    return True


def brute_nu(g: Graph) -> int:
    best = 0
    for r in range(len(g.edges), 0, -1):
        for sub in combinations(g.edges, r):
            if _is_matching(sub):
                return r
    return best


def brute_nu0(g: Graph) -> int:
    best = 0
    for r in range(1, len(g.edges) + 1):
        for sub in combinations(g.edges, r):
            if not _is_matching(sub):
                continue
            span = {v for e in sub for v in e}
            extra = [
                e for e in g.edges if e not in sub and e[0] in span and e[1] in span
            ]
            if not extra:
                best = r
    return best


def brute_mm(g: Graph) -> int:
    best = None
    for r in range(0, len(g.edges) + 1):
        for sub in combinations(g.edges, r):
            if not _is_matching(sub):
                continue
            span = {v for e in sub for v in e}
            if all(u in span or v in span for u, v in g.edges):
                return r
    return best


# -- brute-force chordality oracle ----------------------------------------------


def brute_has_chordless_cycle(g: Graph) -> bool:
    """Any vertex subset inducing a cycle of length >= 4?"""
    for k in range(4, g.n + 1):
        for sub in combinations(range(g.n), k):
            degs = [sum(1 for u in sub if u != v and g.has_edge(u, v)) for v in sub]
            if any(d != 2 for d in degs):
                continue
            # 2-regular induced subgraph; connected means a single cycle
            seen = {sub[0]}
            frontier = [sub[0]]
            while frontier:
                v = frontier.pop()
                for u in sub:
                    if u not in seen and g.has_edge(u, v):
                        seen.add(u)
                        frontier.append(u)
            if len(seen) == k:
                return True
    return False


# -- independent homology oracle -------------------------------------------------


def brute_homology(facets: list[tuple[int, ...]], char: int) -> dict[int, int]:
    """Reduced homology dims by dense elimination over Fraction or GF(p)."""
    faces: set[tuple[int, ...]] = set()

    def close(f: tuple[int, ...]):
        if f in faces or not f:
            return
        faces.add(f)
        for i in range(len(f)):
            close(f[:i] + f[i + 1:])

    for f in facets:
        close(tuple(sorted(f)))
    if not faces:
        return {-1: 1}
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for lst in by_dim.values():
        lst.sort()
    maxdim = max(by_dim)

    def boundary_matrix(d: int):
        rows = by_dim.get(d - 1, [])
        cols = by_dim.get(d, [])
        idx = {f: i for i, f in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, f in enumerate(cols):
            for pos in range(len(f)):
                mat[idx[f[:pos] + f[pos + 1:]]][j] = (-1) ** pos
        return mat

    def rank(mat) -> int:
        if not mat or not mat[0]:
            return 0
        if char == 0:
            m = [[Fraction(x) for x in row] for row in mat]
        else:
            m = [[x % char for x in row] for row in mat]
        r = 0
        for c in range(len(m[0])):
            piv = next((i for i in range(r, len(m)) if m[i][c]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            if char == 0:
                inv = 1 / m[r][c]
            else:
                inv = pow(m[r][c], char - 2, char)
            for i in range(len(m)):
                if i != r and m[i][c]:
                    f = m[i][c] * inv
                    for cc in range(c, len(m[0])):
                        m[i][cc] -= f * m[r][cc]
                        if char:
                            m[i][cc] %= char
            r += 1
        return r

    ranks = {0: 1 if by_dim.get(0) else 0}
    for d in range(1, maxdim + 1):
        ranks[d] = rank(boundary_matrix(d))
    dims = {-1: 0}
    for t in range(maxdim + 1):
        dims[t] = len(by_dim.get(t, [])) - ranks.get(t, 0) - ranks.get(t + 1, 0)
    return dims
