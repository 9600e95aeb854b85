"""Finite simple undirected graphs: construction, generators, complement,
and the Mycielskian transform.

Vertices are always the integers 0..n-1 and edges are normalized (u, v)
pairs with u < v. Graphs are immutable after construction, so they can be
shared freely between threads; every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "Graph",
    "VertexRole",
    "GENERATOR_FAMILIES",
    "build_graph",
    "degree",
    "degree_sequence",
    "adjacency",
    "complement",
    "mycielskian",
    "is_connected",
    "generate",
    "role_from_index",
    "role_to_index",
]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    The edge set is a frozenset of (u, v) tuples with u < v; duplicate
    edges and loops cannot be represented. Use :func:`build_graph` to
    normalize raw edge lists.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop edge ({u}, {v}) is not allowed")
            if not (0 <= u < v < self.n):
                raise ValueError(
                    f"edge ({u}, {v}) is not a normalized in-range pair for n={self.n}"
                )

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class VertexRole:
    """Role of a vertex inside a Mycielskian-shaped graph.

    A Mycielskian built from an n-vertex base graph has three kinds of
    vertices: the n originals, their n shadows, and one apex. Under the
    fixed labeling convention original(i) sits at index i, shadow(i) at
    index n+i, and the apex at index 2n.
    """

    kind: str  # "original" | "shadow" | "apex"
    index: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("original", "shadow", "apex"):
            raise ValueError(f"unknown vertex role kind {self.kind!r}")
        if self.kind == "apex":
            if self.index is not None:
                raise ValueError("apex role carries no index")
        elif self.index is None or self.index < 0:
            raise ValueError(f"{self.kind} role needs a nonnegative index")

    @classmethod
    def original(cls, i: int) -> "VertexRole":
        return cls("original", i)

    @classmethod
    def shadow(cls, i: int) -> "VertexRole":
        return cls("shadow", i)

    @classmethod
    def apex(cls) -> "VertexRole":
        return cls("apex")

    def label(self) -> str:
        if self.kind == "apex":
            return "apex"
        return f"{self.kind}[{self.index}]"


def role_to_index(role: VertexRole, n: int) -> int:
    """Map a role to its vertex index in a Mycielskian built from n vertices."""
    if role.kind == "apex":
        return 2 * n
    if role.index >= n:  # type: ignore[operator]
        raise ValueError(f"role index {role.index} out of range for n={n}")
    if role.kind == "original":
        return role.index  # type: ignore[return-value]
    return n + role.index  # type: ignore[operator]


def role_from_index(index: int, n: int) -> VertexRole:
    """Inverse of :func:`role_to_index`."""
    if not 0 <= index <= 2 * n:
        raise ValueError(f"index {index} out of range for a Mycielskian over n={n}")
    if index < n:
        return VertexRole.original(index)
    if index < 2 * n:
        return VertexRole.shadow(index - n)
    return VertexRole.apex()


def build_graph(n: int, edge_list) -> Graph:
    """Build a Graph from raw (u, v) pairs, normalizing and deduplicating.

    Rejects loops and out-of-range endpoints, naming the offending pair.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    edges = set()
    for pair in edge_list:
        u, v = pair
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint out of range [0, {n})")
        edges.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(edges))


def degree(g: Graph, v: int) -> int:
    """Number of edges incident to v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range [0, {g.n})")
    return sum(1 for e in g.edges if v in e)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees of all vertices, indexed by vertex id."""
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def adjacency(g: Graph) -> list[list[int]]:
    """Sorted adjacency lists, indexed by vertex id."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for row in adj:
        row.sort()
    return adj


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    missing = frozenset(
        pair for pair in combinations(range(g.n), 2) if pair not in g.edges
    )
    return Graph(g.n, missing)


def mycielskian(g: Graph) -> Graph:
    """The Mycielskian of g.

    The result has 2n+1 vertices: the originals keep their indices, the
    shadow of vertex i is n+i, and the apex is 2n. Each shadow copies its
    original's adjacencies into the original set, and the apex is joined
    to every shadow, giving exactly 3m+n edges. Shadows form an
    independent set.
    """
    n = g.n
    if n < 1:
        raise ValueError("mycielskian needs at least one vertex")
    edges = set(g.edges)
    for u, v in g.edges:
        edges.add((u, n + v))
        edges.add((v, n + u))
    apex = 2 * n
    for i in range(n):
        edges.add((n + i, apex))
    return Graph(2 * n + 1, frozenset(edges))


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0.

    The empty graph and single vertices count as connected.
    """
    if g.n <= 1:
        return True
    adj = adjacency(g)
    seen = [False] * g.n
    seen[0] = True
    frontier = [0]
    reached = 1
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    reached += 1
                    nxt.append(w)
        frontier = nxt
    return reached == g.n


GENERATOR_FAMILIES = ("path", "cycle", "star", "complete", "random")

_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> tuple[int, int]:
    """One step of the splitmix64 generator: returns (next_state, output).

    Fixed algorithm so that random graphs are reproducible everywhere;
    never swap this for a platform RNG.
    """
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def generate(
    family: str,
    n: int,
    p: float | None = None,
    seed: int | None = None,
) -> Graph:
    """Generate a canonical labeled instance of a standard family.

    path: edges {i, i+1}; cycle: path plus {0, n-1} (n >= 3); star:
    center 0; complete: all pairs. random: each pair is included
    independently with probability p, decided by a splitmix64 stream
    seeded with `seed`, so the same (n, p, seed) always yields the
    identical edge set on every platform.
    """
    if family not in GENERATOR_FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of {GENERATOR_FAMILIES}")
    if n < 1:
        raise ValueError(f"family {family!r} needs n >= 1, got {n}")

    if family == "path":
        return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))
    if family == "cycle":
        if n < 3:
            raise ValueError(f"cycle needs n >= 3, got {n}")
        edges = {(i, i + 1) for i in range(n - 1)}
        edges.add((0, n - 1))
        return Graph(n, frozenset(edges))
    if family == "star":
        return Graph(n, frozenset((0, i) for i in range(1, n)))
    if family == "complete":
        return Graph(n, frozenset(combinations(range(n), 2)))

    # random
    if p is None or not 0.0 <= p <= 1.0:
        raise ValueError(f"random family needs p in [0, 1], got {p}")
    if seed is None:
        raise ValueError("random family needs an explicit seed")
    state = seed & _MASK64
    threshold = int(p * (1 << 64))
    edges = set()
    for pair in combinations(range(n), 2):
        state, draw = _splitmix64(state)
        if draw < threshold:
            edges.add(pair)
    return Graph(n, frozenset(edges))
