"""Exact shortest-path distances and the distance- and degree-based indices.

All-pairs distances come from one BFS per source vertex, so the work is
O(n(n+m)) and every entry is an exact hop count. The five indices are
evaluated in exact integer arithmetic; they reach order n**4 and must not
wrap, which Python integers guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import mul

from .graph_core import Graph, adjacency, degree_sequence

__all__ = [
    "DisconnectedGraphError",
    "DistanceMatrix",
    "IndexReport",
    "distance_matrix",
    "wiener",
    "zagreb1",
    "zagreb2",
    "degree_distance",
    "gutman",
    "index_report",
]


class DisconnectedGraphError(ValueError):
    """Raised when a distance computation meets an unreachable pair."""

    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.witness = (u, v)


@dataclass
class DistanceMatrix:
    """Exact n x n hop distances of a connected graph."""

    n: int
    d: list[list[int]]

    @property
    def diameter(self) -> int:
        return max(max(row) for row in self.d)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; raises DisconnectedGraphError with a witness
    pair when some vertex is unreachable."""
    n = g.n
    if n < 1:
        raise ValueError("distance matrix needs at least one vertex")
    adj = adjacency(g)
    rows = []
    for src in range(n):
        dist = [-1] * n
        dist[src] = 0
        frontier = [src]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        if src == 0:
            # one reachability check suffices: connectivity is symmetric
            for v, dv in enumerate(dist):
                if dv < 0:
                    raise DisconnectedGraphError(0, v)
        rows.append(dist)
    return DistanceMatrix(n, rows)


def wiener(dm: DistanceMatrix) -> int:
    """Sum of distances over unordered vertex pairs."""
    return sum(sum(row) for row in dm.d) // 2


def zagreb1(g: Graph) -> int:
    """Sum of squared vertex degrees."""
    return sum(d * d for d in degree_sequence(g))


def zagreb2(g: Graph) -> int:
    """Sum over edges of the product of endpoint degrees."""
    deg = degree_sequence(g)
    return sum(deg[u] * deg[v] for u, v in g.edges)


def degree_distance(g: Graph, dm: DistanceMatrix) -> int:
    """Sum over unordered pairs of distance times the sum of endpoint degrees.

    Computed as sum_u deg(u) * rowsum(u), which counts each unordered pair
    once from each endpoint.
    """
    deg = degree_sequence(g)
    return sum(deg[u] * sum(dm.d[u]) for u in range(g.n))


def gutman(g: Graph, dm: DistanceMatrix) -> int:
    """Sum over unordered pairs of distance times the product of endpoint
    degrees."""
    deg = degree_sequence(g)
    total = 0
    for u in range(g.n):
        total += deg[u] * sum(map(mul, dm.d[u], deg))
    return total // 2


@dataclass(frozen=True)
class IndexReport:
    """All indices of one connected graph, from a single distance pass."""

    n: int
    m: int
    diameter: int
    wiener: int
    zagreb1: int
    zagreb2: int
    degree_distance: int
    gutman: int


def index_report(g: Graph) -> IndexReport:
    """Compute every index of a connected graph."""
    dm = distance_matrix(g)
    return IndexReport(
        n=g.n,
        m=g.m,
        diameter=dm.diameter,
        wiener=wiener(dm),
        zagreb1=zagreb1(g),
        zagreb2=zagreb2(g),
        degree_distance=degree_distance(g, dm),
        gutman=gutman(g, dm),
    )
