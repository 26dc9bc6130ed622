#!/usr/bin/env python3
"""Regenerate the checked-in graph6 fixture files.

Uses networkx (graph atlas + its own graph6 writer) as an external,
independent source of small-graph corpora.  Run from this directory:

    python generate_fixtures.py
"""

from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

HERE = Path(__file__).parent


def main() -> None:
    atlas = graph_atlas_g()[1:]  # drop the 0-vertex placeholder
    by_n: dict[int, list[str]] = {}
    for G in atlas:
        if G.number_of_nodes() == 0 or not nx.is_connected(G):
            continue
        line = nx.to_graph6_bytes(G, header=False).decode().strip()
        by_n.setdefault(G.number_of_nodes(), []).append(line)
    for n, lines in sorted(by_n.items()):
        out = HERE / f"connected_n{n}.g6"
        out.write_text("\n".join(sorted(lines)) + "\n")
        print(f"{out.name}: {len(lines)} graphs")

    # The atlas stops at 7 vertices; add seeded random 8-vertex graphs so the
    # parser also sees externally produced lines at that size.
    import random

    rng = random.Random(88)
    lines = []
    for _ in range(100):
        G = nx.gnp_random_graph(8, rng.choice((0.2, 0.4, 0.7)), seed=rng.randint(0, 10**9))
        lines.append(nx.to_graph6_bytes(G, header=False).decode().strip())
    out = HERE / "random_n8.g6"
    out.write_text("\n".join(lines) + "\n")
    print(f"{out.name}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
