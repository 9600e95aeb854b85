#!/usr/bin/env python3
"""Regenerate tests/data/connected_n2_to_n7.g6.

The file holds every connected graph on 2..7 vertices, one per
isomorphism class, taken from the networkx graph atlas and written in
canonical graph6. Expected class counts per order: 1, 2, 6, 21, 112, 853.
Each line is cross-checked against networkx's own graph6 writer before it
is accepted.
"""

from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from mycindex import build_graph, write_graph6

EXPECTED_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def main() -> None:
    out_path = Path(__file__).resolve().parent.parent / "tests" / "data" / "connected_n2_to_n7.g6"
    out_path.parent.mkdir(parents=True, exist_ok=True)
    counts: dict[int, int] = {}
    lines = []
    for atlas_graph in graph_atlas_g():
        n = atlas_graph.number_of_nodes()
        if not 2 <= n <= 7 or not nx.is_connected(atlas_graph):
            continue
        g = build_graph(n, list(atlas_graph.edges()))
        line = write_graph6(g)
        reference = nx.to_graph6_bytes(atlas_graph, nodes=sorted(atlas_graph), header=False)
        assert line == reference.decode("ascii").strip(), f"encoder mismatch on {line}"
        lines.append(line)
        counts[n] = counts.get(n, 0) + 1
    assert counts == EXPECTED_COUNTS, f"unexpected class counts {counts}"
    out_path.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {len(lines)} graphs to {out_path}")


if __name__ == "__main__":
    main()
