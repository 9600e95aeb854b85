"""Closed-form predictors for degrees and distances in a Mycielskian and in
its complement, plus a verifier that checks them against direct computation.

The predictors never look at the derived graph: Mycielskian degrees come
from base degrees alone, Mycielskian distances from base distances, and the
complement's distances only from base adjacency. The verifier constructs
the derived graph explicitly, recomputes everything by BFS, and reports
every mismatch, so the laws stay predictions rather than axioms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formats import write_graph6
from .graph_core import (
    Graph,
    VertexRole,
    complement,
    degree,
    degree_sequence,
    is_connected,
    mycielskian,
    role_from_index,
)
from .metrics import DistanceMatrix, distance_matrix

__all__ = [
    "LawReport",
    "TARGETS",
    "mu_degree",
    "mu_distance",
    "mu_bar_degree",
    "mu_bar_distance",
    "verify_structure",
]

TARGETS = ("mu", "mu_bar")


def _check_target(target: str) -> None:
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}, expected one of {TARGETS}")


def mu_degree(g: Graph, role: VertexRole) -> int:
    """Predicted degree of a vertex of the Mycielskian of g.

    The apex sees all n shadows; a shadow sees the apex plus its
    original's neighbors; an original keeps its neighbors and gains their
    shadows, doubling its degree.
    """
    if role.kind == "apex":
        return g.n
    base = degree(g, role.index)  # also range-checks the role index
    if role.kind == "shadow":
        return 1 + base
    return 2 * base


def mu_distance(dm_g: DistanceMatrix, a: VertexRole, b: VertexRole) -> int:
    """Predicted distance between two vertices of the Mycielskian, given the
    base graph's distance matrix.

    Original pairs travel at base distance capped at 4 (the apex offers a
    four-step detour); original-to-foreign-shadow pairs cap at 3; all other
    pair shapes sit at fixed small distances. Identical roles give 0.
    """
    if a == b:
        return 0
    if a.kind == "apex" or b.kind == "apex":
        other = b if a.kind == "apex" else a
        if other.kind == "apex":
            return 0
        _check_role_index(other, dm_g.n)
        return 1 if other.kind == "shadow" else 2
    _check_role_index(a, dm_g.n)
    _check_role_index(b, dm_g.n)
    if a.kind == "shadow" and b.kind == "shadow":
        return 2
    if a.kind == "original" and b.kind == "original":
        return min(dm_g.d[a.index][b.index], 4)
    # one original, one shadow
    i = a.index if a.kind == "original" else b.index
    j = b.index if a.kind == "original" else a.index
    if i == j:
        return 2
    return min(dm_g.d[i][j], 3)


def mu_bar_degree(g: Graph, role: VertexRole) -> int:
    """Predicted degree of a vertex of the complement of the Mycielskian."""
    n = g.n
    if role.kind == "apex":
        return n
    base = degree(g, role.index)
    if role.kind == "shadow":
        return 2 * n - (1 + base)
    return 2 * n - 2 * base


def mu_bar_distance(g: Graph, a: VertexRole, b: VertexRole) -> int:
    """Predicted distance in the complement of the Mycielskian, keyed only
    on adjacency in the base graph. Every branch is 1 or 2: the complement
    has diameter exactly 2 for connected bases with n >= 2.
    """
    if a == b:
        return 0
    if a.kind == "apex" or b.kind == "apex":
        other = b if a.kind == "apex" else a
        if other.kind == "apex":
            return 0
        _check_role_index(other, g.n)
        return 2 if other.kind == "shadow" else 1
    _check_role_index(a, g.n)
    _check_role_index(b, g.n)
    if a.kind == "shadow" and b.kind == "shadow":
        return 1
    if a.kind == "original" and b.kind == "original":
        return 2 if g.has_edge(a.index, b.index) else 1
    i = a.index if a.kind == "original" else b.index
    j = b.index if a.kind == "original" else a.index
    if i == j:
        return 1
    return 2 if g.has_edge(i, j) else 1


def _check_role_index(role: VertexRole, n: int) -> None:
    if role.index is not None and role.index >= n:
        raise ValueError(f"role index {role.index} out of range for n={n}")


@dataclass
class LawReport:
    """Outcome of checking the degree and distance laws on one input graph.

    Mismatch entries are (role label, predicted, actual) for degrees and
    (label a, label b, predicted, actual) for distances; both lists are
    empty exactly when the laws hold on this input. checked_pairs counts
    all degree checks plus all unordered distance checks.
    """

    graph_id: str
    target: str
    n: int
    checked_pairs: int
    degree_mismatches: list[tuple[str, int, int]] = field(default_factory=list)
    distance_mismatches: list[tuple[str, str, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.degree_mismatches and not self.distance_mismatches


def verify_structure(g: Graph, target: str) -> LawReport:
    """Check every degree and distance prediction for mu(g) or its
    complement against the explicitly constructed graph.

    Requires a connected base with n >= 2 (the complement of the
    Mycielskian of a single vertex is disconnected, so neither law is
    assertable there).
    """
    _check_target(target)
    if g.n < 2:
        raise ValueError(f"structure laws need n >= 2, got n={g.n}")
    if not is_connected(g):
        raise ValueError("structure laws need a connected base graph")

    derived = mycielskian(g)
    if target == "mu_bar":
        derived = complement(derived)
    dm_base = distance_matrix(g)
    dm_derived = distance_matrix(derived)
    actual_deg = degree_sequence(derived)

    roles = [role_from_index(i, g.n) for i in range(derived.n)]
    report = LawReport(
        graph_id=write_graph6(g),
        target=target,
        n=g.n,
        checked_pairs=derived.n * (derived.n - 1) // 2 + derived.n,
    )

    for i, role in enumerate(roles):
        predicted = mu_degree(g, role) if target == "mu" else mu_bar_degree(g, role)
        if predicted != actual_deg[i]:
            report.degree_mismatches.append((role.label(), predicted, actual_deg[i]))

    for i in range(derived.n):
        for j in range(i + 1, derived.n):
            if target == "mu":
                predicted = mu_distance(dm_base, roles[i], roles[j])
            else:
                predicted = mu_bar_distance(g, roles[i], roles[j])
            actual = dm_derived.d[i][j]
            if predicted != actual:
                report.distance_mismatches.append(
                    (roles[i].label(), roles[j].label(), predicted, actual)
                )
    return report
