"""Corpus enumeration and exhaustive verification sweeps.

The corpus is every connected graph on up to eight vertices, one per
isomorphism class, produced by vertex augmentation (attach a new vertex to
each nonempty subset of a smaller connected graph) with canonical-form
deduplication.  Sweeps then check the classification theorem and each
supporting lemma over a corpus, optionally including two-component
disjoint unions, and report violations by graph6 string so any failure is
reproducible from the report alone.
"""

from __future__ import annotations

import os
import random
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from . import (
    cameron_walker,
    chordality,
    classifier,
    formats_io,
    graph_core,
    matchings,
    regularity_oracle,
)
from .errors import CapExceeded, TooLarge, UnknownProperty
from .graph_core import DeleteEdge, Graph
from .regularity_oracle import FieldSpec

INTERNAL_ENUMERATION_CAP = 8

# Connected graph counts per vertex count, for corpus self-checks.
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}

LEMMA_TAGS = ("UB", "FL1", "FL2", "FL3", "Comp", "C1", "C1a", "C2", "CaWa", "Squeeze")

_FL1_SEED = 0x5EED
_FL1_SAMPLES = 5


@dataclass(frozen=True)
class Corpus:
    n_range: tuple[int, int]
    graphs: tuple[Graph, ...]
    connected_only: bool
    provenance: str


@dataclass(frozen=True)
class SweepReport:
    property_name: str
    checked: int
    violations: tuple[tuple[str, str], ...]  # (graph6, detail)
    skips: tuple[str, ...]
    seconds: float

    @property
    def passed(self) -> bool:
        return not self.violations


# -- enumeration ----------------------------------------------------------------

_connected_cache: dict[int, tuple[Graph, ...]] = {}


def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on exactly ``n`` vertices, canonically labeled."""
    if n < 1:
        raise ValueError("vertex count must be positive")
    if n > INTERNAL_ENUMERATION_CAP:
        raise TooLarge(
            f"internal enumeration caps at {INTERNAL_ENUMERATION_CAP} vertices; "
            "ingest an external graph6 file instead"
        )
    hit = _connected_cache.get(n)
    if hit is not None:
        return hit
    if n == 1:
        out = (graph_core.from_edges(1, []),)
    else:
        seen: dict[bytes, None] = {}
        for g in connected_graphs(n - 1):
            base = [g.adj_mask(v) for v in range(n - 1)]
            for attach in range(1, 1 << (n - 1)):
                adj = list(base) + [attach]
                for v in range(n - 1):
                    if attach >> v & 1:
                        adj[v] |= 1 << (n - 1)
                cand = Graph(n, adj)
                seen.setdefault(graph_core.canonical_form(cand), None)
        out = tuple(
            graph_core.graph_of_canonical_form(key) for key in sorted(seen)
        )
    if n in CONNECTED_COUNTS and len(out) != CONNECTED_COUNTS[n]:
        raise AssertionError(
            f"enumeration found {len(out)} connected graphs on {n} vertices, "
            f"expected {CONNECTED_COUNTS[n]}"
        )
    _connected_cache[n] = out
    return out


def enumerate_connected(n: int) -> Corpus:
    """Corpus of all connected graphs on ``n`` vertices, exactly once each."""
    return Corpus((n, n), connected_graphs(n), True, "internal enumeration")


def enumerate_all(n: int) -> Corpus:
    """Corpus of all graphs on ``n`` vertices, via component multisets."""
    if n < 1:
        raise ValueError("vertex count must be positive")
    if n > INTERNAL_ENUMERATION_CAP:
        raise TooLarge(
            f"internal enumeration caps at {INTERNAL_ENUMERATION_CAP} vertices"
        )
    catalog = []
    for k in range(1, n + 1):
        for g in connected_graphs(k):
            catalog.append((k, graph_core.canonical_form(g), g))
    catalog.sort(key=lambda item: (item[0], item[1]))

    out: list[Graph] = []

    def build(remaining: int, start: int, parts: list[Graph]) -> None:
        if remaining == 0:
            acc = parts[0]
            for p in parts[1:]:
                acc = graph_core.disjoint_union(acc, p)
            out.append(acc)
            return
        for idx in range(start, len(catalog)):
            k, _, g = catalog[idx]
            if k > remaining:
                continue
            parts.append(g)
            build(remaining - k, idx, parts)
            parts.pop()

    build(n, 0, [])
    return Corpus((n, n), tuple(out), False, "internal enumeration")


def corpus_up_to(max_n: int, connected: bool = True) -> Corpus:
    graphs: list[Graph] = []
    for n in range(1, max_n + 1):
        graphs.extend(
            connected_graphs(n) if connected else enumerate_all(n).graphs
        )
    return Corpus((1, max_n), tuple(graphs), connected, "internal enumeration")


def corpus_from_graph6(text: str, provenance: str = "external graph6 file") -> Corpus:
    docs = formats_io.read_graph6_lines(text)
    graphs = tuple(d.graph for d in docs)
    ns = [g.n for g in graphs] or [0]
    return Corpus((min(ns), max(ns)), graphs, False, provenance)


def union_pairs(graphs, total_cap: int = 9) -> list[Graph]:
    """All two-component disjoint unions (unordered, repeats allowed)."""
    out = []
    items = list(graphs)
    for i, g1 in enumerate(items):
        for g2 in items[i:]:
            if g1.n + g2.n <= total_cap:
                out.append(graph_core.disjoint_union(g1, g2))
    return out


# -- the theorem sweep ------------------------------------------------------------


def verify_theorem(
    graphs,
    chars=(0, 2),
    include_unions: bool = True,
    union_total_cap: int = 9,
    workers: int = 1,
    oracle_cap: int = regularity_oracle.ORACLE_VERTEX_CAP,
) -> SweepReport:
    """Check structural == numeric on every graph (and optional unions)."""
    start = time.monotonic()
    items = [formats_io.encode_graph6(g) for g in graphs]
    if include_unions:
        items += [
            formats_io.encode_graph6(u) for u in union_pairs(graphs, union_total_cap)
        ]
    items.sort()
    violations: list[tuple[str, str]] = []
    skips: list[str] = []
    if workers > 1:
        chunks = [items[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(
                _theorem_chunk, [(chunk, tuple(chars), oracle_cap) for chunk in chunks]
            )
        for v, s in results:
            violations.extend(v)
            skips.extend(s)
        violations.sort()
        skips.sort()
    else:
        violations, skips = _theorem_chunk((items, tuple(chars), oracle_cap))
    return SweepReport(
        "main-theorem",
        len(items),
        tuple(violations),
        tuple(skips),
        time.monotonic() - start,
    )


def _theorem_chunk(args) -> tuple[list[tuple[str, str]], list[str]]:
    items, chars, oracle_cap = args
    violations: list[tuple[str, str]] = []
    skips: list[str] = []
    for g6 in items:
        g = formats_io.parse_graph6(g6)
        for c in chars:
            try:
                verdict = classifier.classify(g, FieldSpec(c), oracle_cap=oracle_cap)
            except CapExceeded:
                skips.append(g6)
                break
            if not verdict.agreement:
                violations.append(
                    (
                        g6,
                        f"char {c}: structural={verdict.structural} "
                        f"numeric={verdict.numeric} shapes={verdict.component_shapes}",
                    )
                )
    return violations, skips


# -- lemma sweeps ------------------------------------------------------------------


def verify_lemma_suite(
    graphs,
    tags,
    chars=(0,),
    cochord_cap: int = 4,
    union_total_cap: int = 9,
) -> list[SweepReport]:
    """One report per requested lemma tag, over the given corpus graphs."""
    reports = []
    for tag in tags:
        if tag not in LEMMA_TAGS:
            raise UnknownProperty(
                f"unknown lemma tag {tag!r}; known: {', '.join(LEMMA_TAGS)}"
            )
        start = time.monotonic()
        violations: list[tuple[str, str]] = []
        skips: list[str] = []
        if tag == "Comp":
            pairs = union_pairs(graphs, union_total_cap)
            checked = len(pairs)
            for u in pairs:
                violations.extend(_check_comp(u, chars))
        else:
            check = _LEMMA_CHECKS[tag]
            checked = len(graphs)
            for g in graphs:
                try:
                    violations.extend(check(g, chars, cochord_cap))
                except CapExceeded:
                    skips.append(formats_io.encode_graph6(g))
        violations.sort()
        reports.append(
            SweepReport(
                tag,
                checked,
                tuple(violations),
                tuple(skips),
                time.monotonic() - start,
            )
        )
    return reports


def _g6(g: Graph) -> str:
    return formats_io.encode_graph6(g)


def _reg_star(g: Graph, char: int) -> int:
    return regularity_oracle.regularity(g, FieldSpec(char)).reg_star


def _check_ub(g, chars, cochord_cap):
    out = []
    if g.num_edges == 0:
        return out
    bound = matchings.mm(g) + 1
    for c in chars:
        reg = _reg_star(g, c)
        if reg > bound:
            out.append((_g6(g), f"char {c}: reg {reg} > mm+1 = {bound}"))
    return out


def _check_fl1(g, chars, cochord_cap):
    out = []
    rng = random.Random(_FL1_SEED ^ zlib.crc32(_g6(g).encode()))
    subsets = []
    for _ in range(_FL1_SAMPLES):
        subsets.append([v for v in range(g.n) if rng.random() < 0.6])
    for c in chars:
        reg = _reg_star(g, c)
        for w in subsets:
            h = graph_core.induced_subgraph(g, w)
            reg_h = _reg_star(h, c)
            if reg_h > reg:
                out.append(
                    (_g6(g), f"char {c}: induced {w} has reg {reg_h} > {reg}")
                )
    return out


def _check_fl2(g, chars, cochord_cap):
    out = []
    for c in chars:
        reg = regularity_oracle.reg_recursion_value(g, c)
        for x in range(g.n):
            minus = regularity_oracle.reg_recursion_value(
                graph_core.apply_surgery(g, graph_core.DeleteVertex(x)), c
            )
            closed = regularity_oracle.reg_recursion_value(
                graph_core.apply_surgery(g, graph_core.CloseVertex(x)), c
            )
            if reg not in (minus, closed + 1):
                out.append(
                    (
                        _g6(g),
                        f"char {c}: vertex {x}: reg {reg} not in "
                        f"{{del={minus}, closed+1={closed + 1}}}",
                    )
                )
    return out


def _check_fl3(g, chars, cochord_cap):
    out = []
    for c in chars:
        reg = regularity_oracle.reg_recursion_value(g, c)
        for e in g.edges:
            minus = regularity_oracle.reg_recursion_value(
                graph_core.apply_surgery(g, DeleteEdge(e)), c
            )
            closed = regularity_oracle.reg_recursion_value(
                graph_core.apply_surgery(g, graph_core.CloseEdge(e)), c
            )
            if reg > max(minus, closed + 1):
                out.append(
                    (
                        _g6(g),
                        f"char {c}: edge {e}: reg {reg} > "
                        f"max(del={minus}, closed+1={closed + 1})",
                    )
                )
    return out


def _check_comp(u: Graph, chars):
    out = []
    comps = graph_core.components(u)
    for c in chars:
        reg = _reg_star(u, c)
        reg_sum = sum(_reg_star(comp, c) - 1 for _, comp in comps) + 1
        if reg != reg_sum:
            out.append((_g6(u), f"char {c}: reg {reg} != component sum {reg_sum}"))
    if matchings.nu(u) != sum(matchings.nu(comp) for _, comp in comps):
        out.append((_g6(u), "matching number not additive over components"))
    if matchings.nu0(u) != sum(matchings.nu0(comp) for _, comp in comps):
        out.append((_g6(u), "induced matching number not additive over components"))
    return out


def _check_c1(g, chars, cochord_cap):
    out = []
    if classifier.contains_c5_subgraph(g):
        return out
    for c in chars:
        if _reg_star(g, c) == matchings.nu(g) + 1 and matchings.nu(g) != matchings.nu0(g):
            out.append(
                (_g6(g), f"char {c}: C5-free, reg = nu+1 but nu {matchings.nu(g)} != nu0 {matchings.nu0(g)}")
            )
    return out


def _middle_edges(g: Graph):
    """Edges lying in the middle of some simple path on three edges."""
    for u, v in g.edges:
        for x in g.neighbors(u):
            if x == v:
                continue
            for y in g.neighbors(v):
                if y != u and y != x:
                    yield (u, v)
                    break
            else:
                continue
            break


def _check_c1a(g, chars, cochord_cap):
    out = []
    for c in chars:
        reg = _reg_star(g, c)
        if reg != matchings.nu(g) + 1:
            continue
        for e in _middle_edges(g):
            h = graph_core.apply_surgery(g, DeleteEdge(e))
            reg_h = _reg_star(h, c)
            if not (reg_h == reg and matchings.nu(h) == matchings.nu(g)):
                out.append(
                    (
                        _g6(g),
                        f"char {c}: middle edge {e}: expected reg and nu preserved, "
                        f"got reg {reg_h} (was {reg}), nu {matchings.nu(h)} "
                        f"(was {matchings.nu(g)})",
                    )
                )
    return out


def _check_c2(g, chars, cochord_cap):
    out = []
    if not g.is_connected() or not classifier.contains_c5_subgraph(g):
        return out
    for c in chars:
        if _reg_star(g, c) == matchings.nu(g) + 1:
            if not classifier.pentagon_test(g):
                out.append(
                    (_g6(g), f"char {c}: contains C5, reg = nu+1, but not the pentagon")
                )
    return out


def _check_cawa(g, chars, cochord_cap):
    if not g.is_connected() or g.n == 0:
        return []
    equal, _, _ = cameron_walker.cw_by_invariants(g)
    dec = cameron_walker.recognize_structural(g)
    if dec.verdict != equal:
        return [(_g6(g), f"structural {dec.verdict} != invariant {equal}")]
    if not cameron_walker.validate_decomposition(g, dec):
        return [(_g6(g), "decomposition failed re-validation")]
    return []


def _check_squeeze(g, chars, cochord_cap):
    out = []
    if g.num_edges == 0:
        return out
    lo = matchings.nu0(g) + 1
    mid = matchings.mm(g) + 1
    hi = matchings.nu(g) + 1
    cochord_hi = chordality.cochord_number(g, cap=cochord_cap).k + 1
    for c in chars:
        reg = _reg_star(g, c)
        if not (lo <= reg <= mid <= hi):
            out.append(
                (_g6(g), f"char {c}: chain broken: {lo} <= {reg} <= {mid} <= {hi}")
            )
        if reg > cochord_hi:
            out.append(
                (_g6(g), f"char {c}: reg {reg} > cochord+1 = {cochord_hi}")
            )
    return out


_LEMMA_CHECKS = {
    "UB": _check_ub,
    "FL1": _check_fl1,
    "FL2": _check_fl2,
    "FL3": _check_fl3,
    "C1": _check_c1,
    "C1a": _check_c1a,
    "C2": _check_c2,
    "CaWa": _check_cawa,
    "Squeeze": _check_squeeze,
}


def default_workers() -> int:
    env = os.environ.get("EILAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            return 1
    return 1
