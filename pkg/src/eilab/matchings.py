"""Exact matching invariants with witness certificates.

Three quantities are computed, all exactly: the matching number (largest
set of pairwise disjoint edges), the induced matching number (largest
matching spanning no further edge of the graph) and the minimum maximal
matching number (smallest matching that cannot be extended).  The latter
two are NP-hard in general, so they run behind hard caps and refuse rather
than approximate.

Ties between optimal certificates break to the lexicographically smallest
sorted edge list, which keeps golden tests stable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapExceeded
from .graph_core import Graph

NP_HARD_VERTEX_CAP = 24
NP_HARD_EDGE_CAP = 60


class MatchingKind(enum.Enum):
    MAXIMUM = "maximum"
    MAXIMUM_INDUCED = "maximum_induced"
    MINIMUM_MAXIMAL = "minimum_maximal"


@dataclass(frozen=True)
class MatchingCertificate:
    kind: MatchingKind
    edges: tuple[tuple[int, int], ...]
    size: int


def validate_certificate(g: Graph, cert: MatchingCertificate) -> bool:
    """Re-check a certificate from scratch, knowing nothing of the search.

    Verifies the edges exist, are pairwise vertex-disjoint, and satisfy the
    side condition of the claimed kind (induced, or maximal).  Optimality is
    not re-proved here; it is covered by brute-force cross-checks in tests.
    """
    if cert.size != len(cert.edges):
        return False
    used = 0
    for u, v in cert.edges:
        if not g.has_edge(u, v):
            return False
        pair = 1 << u | 1 << v
        if used & pair:
            return False
        used |= pair
    if cert.kind is MatchingKind.MAXIMUM_INDUCED:
        for u, v in g.edges:
            pair = 1 << u | 1 << v
            if (u, v) not in cert.edges and used & pair == pair:
                return False
    if cert.kind is MatchingKind.MINIMUM_MAXIMAL:
        for u, v in g.edges:
            if not used & (1 << u | 1 << v):
                return False
    return True


# -- matching number ----------------------------------------------------------


def max_matching(g: Graph) -> MatchingCertificate:
    """Maximum matching, exact, with the lex-smallest optimal edge list."""
    target = nu(g)
    chosen: list[tuple[int, int]] = []
    avail = g.full_mask
    edges = g.edges
    scan = 0
    size_fn = _nu_of_mask_fn(g)
    while len(chosen) < target:
        for idx in range(scan, len(edges)):
            u, v = edges[idx]
            pair = 1 << u | 1 << v
            if avail & pair == pair and size_fn(avail ^ pair) == target - len(chosen) - 1:
                chosen.append((u, v))
                avail ^= pair
                scan = idx + 1
                break
        else:  # pragma: no cover - exactness of the size oracle forbids this
            raise AssertionError("maximum matching extraction failed")
    return MatchingCertificate(MatchingKind.MAXIMUM, tuple(chosen), target)


@lru_cache(maxsize=None)
def nu(g: Graph) -> int:
    """Matching number."""
    return _nu_of_mask_fn(g)(g.full_mask)


@lru_cache(maxsize=None)
def _nu_of_mask_fn(g: Graph):
    adj = [g.adj_mask(v) for v in range(g.n)]
    memo: dict[int, int] = {0: 0}

    def size(mask: int) -> int:
        got = memo.get(mask)
        if got is not None:
            return got
        v = (mask & -mask).bit_length() - 1
        best = size(mask & ~(1 << v))
        nbrs = adj[v] & mask
        while nbrs:
            low = nbrs & -nbrs
            nbrs ^= low
            cand = 1 + size(mask & ~(1 << v) & ~low)
            if cand > best:
                best = cand
        memo[mask] = best
        return best

    return size


# -- induced matching number --------------------------------------------------


def induced_matching_number(g: Graph) -> MatchingCertificate:
    """Maximum induced matching via exhaustive search with pruning."""
    _check_np_caps(g, "induced matching number")
    adj = [g.adj_mask(v) for v in range(g.n)]
    edges = g.edges
    closed = [adj[u] | adj[v] | 1 << u | 1 << v for u, v in edges]
    best_size = -1
    best_edges: tuple[tuple[int, int], ...] = ()

    def search(start: int, avail: int, chosen: list[tuple[int, int]]) -> None:
        nonlocal best_size, best_edges
        if len(chosen) > best_size:
            best_size = len(chosen)
            best_edges = tuple(chosen)
        if len(chosen) + (avail.bit_count() >> 1) <= best_size:
            return
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            pair = 1 << u | 1 << v
            if avail & pair == pair:
                chosen.append((u, v))
                search(idx + 1, avail & ~closed[idx], chosen)
                chosen.pop()

    search(0, g.full_mask, [])
    return MatchingCertificate(MatchingKind.MAXIMUM_INDUCED, best_edges, best_size)


@lru_cache(maxsize=None)
def nu0(g: Graph) -> int:
    """Induced matching number."""
    return induced_matching_number(g).size


# -- minimum maximal matching -------------------------------------------------


def min_maximal_matching(g: Graph) -> MatchingCertificate:
    """Smallest maximal matching, by branching on the first uncovered edge."""
    _check_np_caps(g, "minimum maximal matching")
    edges = g.edges
    best: tuple[int, tuple[tuple[int, int], ...]] | None = None

    def first_uncovered(matched: int) -> tuple[int, int] | None:
        for u, v in edges:
            if not matched & (1 << u | 1 << v):
                return (u, v)
        return None

    def search(matched: int, chosen: list[tuple[int, int]]) -> None:
        nonlocal best
        gap = first_uncovered(matched)
        if gap is None:
            cand = (len(chosen), tuple(sorted(chosen)))
            if best is None or cand < best:
                best = cand
            return
        if best is not None and len(chosen) + 1 > best[0]:
            return
        u, v = gap
        # Some chosen edge must touch u or v, else (u, v) extends the matching.
        for a, b in edges:
            pair = 1 << a | 1 << b
            if matched & pair:
                continue
            if a in (u, v) or b in (u, v):
                chosen.append((a, b))
                search(matched | pair, chosen)
                chosen.pop()

    search(0, [])
    assert best is not None
    return MatchingCertificate(MatchingKind.MINIMUM_MAXIMAL, best[1], best[0])


@lru_cache(maxsize=None)
def mm(g: Graph) -> int:
    """Minimum maximal matching number."""
    return min_maximal_matching(g).size


def _check_np_caps(g: Graph, what: str) -> None:
    if g.n > NP_HARD_VERTEX_CAP or g.num_edges > NP_HARD_EDGE_CAP:
        raise CapExceeded(
            f"{what} refuses graphs beyond n={NP_HARD_VERTEX_CAP}, "
            f"m={NP_HARD_EDGE_CAP} (got n={g.n}, m={g.num_edges})"
        )
