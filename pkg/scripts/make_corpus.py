"""Regenerate src/kappa1/data/connected_le8.g6.

Every graph on 8 vertices is a 7-vertex graph plus one vertex, so extending
the networkx atlas (all graphs up to 7 vertices) by every neighbour set and
deduplicating up to isomorphism yields all 8-vertex graphs.
Expected class counts (OEIS A001349): 1, 1, 2, 6, 21, 112, 853, 11117.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

import networkx as nx

from kappa1.corpus import CONNECTED_LE8, to_graph6
from kappa1.graph import Graph


def _to_graph(h: nx.Graph) -> Graph:
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def main() -> None:
    atlas = nx.graph_atlas_g()
    out = [h for h in atlas if h.number_of_nodes() >= 1 and nx.is_connected(h)]

    buckets: dict[str, list[nx.Graph]] = defaultdict(list)
    for h in atlas:
        if h.number_of_nodes() != 7:
            continue
        for r in range(1, 8):
            for nbrs in itertools.combinations(range(7), r):
                g = h.copy()
                g.add_edges_from((7, v) for v in nbrs)
                if not nx.is_connected(g):
                    continue
                key = nx.weisfeiler_lehman_graph_hash(g, iterations=4)
                if not any(nx.is_isomorphic(g, other) for other in buckets[key]):
                    buckets[key].append(g)
    eight = [g for bucket in buckets.values() for g in bucket]
    out.extend(eight)

    counts = defaultdict(int)
    for h in out:
        counts[h.number_of_nodes()] += 1
    print(dict(sorted(counts.items())))
    assert [counts[i] for i in range(1, 9)] == [1, 1, 2, 6, 21, 112, 853, 11117]

    graphs = sorted((_to_graph(h) for h in out), key=lambda g: (g.vertex_count, g.edge_count, to_graph6(g)))
    CONNECTED_LE8.write_text("".join(to_graph6(g) + "\n" for g in graphs), encoding="ascii")


if __name__ == "__main__":
    main()
