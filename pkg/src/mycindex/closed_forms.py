"""Evaluators for the published closed forms for the Gutman index of
Mycielskian graphs and their complements, and the audit that confronts
them with brute force.

Two closed forms are audited, labeled theorem 5 (the Mycielskian of a
diameter-2 graph) and theorem 6 (the complement of the Mycielskian,
unconditional). Each comes with a six-case derivation that splits the
vertex pairs of a Mycielskian-shaped graph by role: apex-shadow,
apex-original, shadow-shadow, original-original, the twin pairs, and the
cross pairs between an original and a foreign shadow.

Every printed expression, per case and aggregate, is evaluated verbatim;
the truth is the Gutman index of the explicitly constructed graph. The
audit records exact integer deltas and never corrects a printed formula
silently. Half-integer terms are evaluated in exact rationals and checked
for integrality.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .formats import write_graph6
from .graph_core import Graph, complement, degree_sequence, is_connected, mycielskian
from .metrics import IndexReport, distance_matrix, gutman, index_report

__all__ = [
    "GraphParameters",
    "PairClass",
    "CaseBreakdown",
    "AuditRecord",
    "lemma_degree_sum",
    "lemma_degree_product",
    "thm5_printed",
    "thm5_cases_printed",
    "thm6_printed",
    "thm6_cases_printed",
    "classify_pair",
    "direct_class_sums",
    "audit",
]


@dataclass(frozen=True)
class GraphParameters:
    """The base-graph quantities every closed form consumes."""

    n: int
    m: int
    zagreb1: int
    zagreb2: int
    degree_distance: int
    gutman: int
    wiener: int

    @classmethod
    def from_report(cls, report: IndexReport) -> "GraphParameters":
        return cls(
            n=report.n,
            m=report.m,
            zagreb1=report.zagreb1,
            zagreb2=report.zagreb2,
            degree_distance=report.degree_distance,
            gutman=report.gutman,
            wiener=report.wiener,
        )

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphParameters":
        return cls.from_report(index_report(g))


class PairClass(Enum):
    """The six pair classes of a Mycielskian-shaped graph, in derivation
    order; the enum value is the case number."""

    APEX_SHADOW = 1
    APEX_ORIGINAL = 2
    SHADOW_SHADOW = 3
    ORIGINAL_ORIGINAL = 4
    TWIN = 5
    CROSS_DISTINCT = 6


@dataclass
class CaseBreakdown:
    """Gutman-index subtotal per pair class, for one target graph."""

    target: str
    subtotals: dict[PairClass, int]

    @property
    def total(self) -> int:
        return sum(self.subtotals.values())

    def case(self, number: int) -> int:
        return self.subtotals[PairClass(number)]


def lemma_degree_sum(g: Graph) -> tuple[int, int]:
    """Sum of (deg u + deg v) over unordered pairs, directly and in closed
    form (n-1) * 2m. Trivially (0, 0) below two vertices."""
    deg = degree_sequence(g)
    n = g.n
    lhs = sum(deg[u] + deg[v] for u in range(n) for v in range(u + 1, n))
    rhs = (n - 1) * 2 * g.m if n >= 1 else 0
    return lhs, rhs


def lemma_degree_product(g: Graph) -> tuple[int, int]:
    """Sum of deg(u) * deg(v) over unordered pairs, directly and in closed
    form 2m^2 - M1/2 (M1 is even, so the value is integral)."""
    deg = degree_sequence(g)
    n = g.n
    lhs = sum(deg[u] * deg[v] for u in range(n) for v in range(u + 1, n))
    rhs = Fraction(2 * g.m * g.m) - Fraction(sum(d * d for d in deg), 2)
    return lhs, _as_int(rhs, "degree-product closed form")


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ValueError(f"{what} is not an integer: {value}")
    return int(value)


def thm5_printed(p: GraphParameters) -> int:
    """The printed aggregate for the Gutman index of the Mycielskian.

    Intended for diameter-2 base graphs; the evaluator itself is total.
    """
    n, m = p.n, p.m
    return (
        6 * p.gutman
        + 3 * p.zagreb1
        + p.degree_distance
        + 2 * (m + n) * (2 * m + n)
        + n * (6 * m - 1)
        + 6 * m
    )


def thm5_cases_printed(p: GraphParameters) -> CaseBreakdown:
    """The six case expressions of the Mycielskian derivation, verbatim.

    Case 6 carries the derivation's outer factor 2 around both of its
    summands, giving 2 * (DD + 2 * Gut); the aggregate in thm5_printed
    weights the same two summands (1, 2), and the audit reports the gap
    rather than deciding which reading was meant.
    """
    n, m, m1 = p.n, p.m, p.zagreb1
    return CaseBreakdown(
        target="mu",
        subtotals={
            PairClass.APEX_SHADOW: n * n + 2 * m,
            PairClass.APEX_ORIGINAL: 8 * n * m,
            PairClass.SHADOW_SHADOW: n * (n - 1) + 4 * (n - 1) * m + 4 * m * m - m1,
            PairClass.ORIGINAL_ORIGINAL: 4 * p.gutman,
            PairClass.TWIN: 4 * (2 * m + m1),
            PairClass.CROSS_DISTINCT: 2 * (p.degree_distance + 2 * p.gutman),
        },
    )


def thm6_printed(p: GraphParameters) -> int:
    """The printed aggregate for the Gutman index of the complement of the
    Mycielskian, evaluated in exact rationals.

    Raises when the half-integer terms do not combine to an integer, which
    signals a parameter tuple inconsistent with any graph.
    """
    n, m, m1, m2 = p.n, p.m, p.zagreb1, p.zagreb2
    value = (
        Fraction(4 * m2)
        - (10 * n + Fraction(5, 2)) * m1
        + 8 * n**4
        - 2 * n**3
        + Fraction(n * n - n, 2)
        - 4 * n * m * (2 * n * n - 2 * n + 3)
        + 2 * m * (n + 1)
        + 26 * m * m
    )
    return _as_int(value, "complement closed form")


def thm6_cases_printed(p: GraphParameters) -> CaseBreakdown:
    """The six case expressions of the complement derivation, verbatim.

    Case 4 is the all-pairs bracket plus the edge bracket; case 6 is the
    ordered-pair bracket plus the edge bracket. Case 6's edge bracket ends
    in 4 * (2m^2 - M1/2), the all-pairs product sum, where the expansion
    of the product term would give 4 * M2; the audit reports the gap.
    """
    n, m, m1, m2 = p.n, p.m, p.zagreb1, p.zagreb2
    half_m1 = Fraction(m1, 2)
    c3 = comb(n, 2) * (2 * n - 1) ** 2 - (2 * n - 1) * (n - 1) * 2 * m + 2 * m * m - half_m1
    c4_pairs = 4 * n * n * comb(n, 2) - 4 * n * (n - 1) * 2 * m + 4 * (2 * m * m - half_m1)
    c4_edges = 4 * n * n * m - 4 * n * m1 + 4 * m2
    c6_pairs = (
        2 * n * (2 * n - 1) * n * (n - 1)
        - 2 * n * (n - 1) * 2 * m
        - 2 * (2 * n - 1) * (n - 1) * 2 * m
        + 4 * (2 * m * m - half_m1)
    )
    c6_edges = (
        2 * n * (2 * n - 1) * 2 * m
        - 2 * n * m1
        - 2 * (2 * n - 1) * m1
        + 4 * (2 * m * m - half_m1)
    )
    return CaseBreakdown(
        target="mu_bar",
        subtotals={
            PairClass.APEX_SHADOW: 2 * n * ((2 * n - 1) * n - 2 * m),
            PairClass.APEX_ORIGINAL: 2 * n * (n * n - 2 * m),
            PairClass.SHADOW_SHADOW: _as_int(c3, "shadow-shadow case"),
            PairClass.ORIGINAL_ORIGINAL: _as_int(c4_pairs + c4_edges, "original-original case"),
            PairClass.TWIN: 2 * n * n * (2 * n - 1) - (6 * n - 2) * 2 * m + 2 * m1,
            PairClass.CROSS_DISTINCT: _as_int(c6_pairs + c6_edges, "cross case"),
        },
    )


def classify_pair(u: int, v: int, n: int) -> PairClass:
    """Class of the unordered vertex pair {u, v} of a Mycielskian-shaped
    graph built over an n-vertex base, under the standard labeling."""
    a, b = (u, v) if u < v else (v, u)
    apex = 2 * n
    if not 0 <= a < b <= apex:
        raise ValueError(f"({u}, {v}) is not a vertex pair of a Mycielskian over n={n}")
    if b == apex:
        return PairClass.APEX_SHADOW if a >= n else PairClass.APEX_ORIGINAL
    if a >= n:
        return PairClass.SHADOW_SHADOW
    if b < n:
        return PairClass.ORIGINAL_ORIGINAL
    return PairClass.TWIN if b - n == a else PairClass.CROSS_DISTINCT


def _build_target(g: Graph, target: str) -> Graph:
    if target not in ("mu", "mu_bar"):
        raise ValueError(f"unknown target {target!r}, expected 'mu' or 'mu_bar'")
    derived = mycielskian(g)
    return complement(derived) if target == "mu_bar" else derived


def _check_audit_input(g: Graph) -> None:
    if g.n < 2:
        raise ValueError(f"audit needs n >= 2, got n={g.n}")
    if not is_connected(g):
        raise ValueError("audit needs a connected base graph")


def direct_class_sums(g: Graph, target: str) -> CaseBreakdown:
    """Per-class Gutman subtotals measured on the constructed target graph.

    The six classes partition all unordered pairs, so the total equals the
    Gutman index of the target exactly.
    """
    _check_audit_input(g)
    derived = _build_target(g, target)
    dm = distance_matrix(derived)
    deg = degree_sequence(derived)
    subtotals = {pc: 0 for pc in PairClass}
    for u in range(derived.n):
        row = dm.d[u]
        for v in range(u + 1, derived.n):
            subtotals[classify_pair(u, v, g.n)] += row[v] * deg[u] * deg[v]
    return CaseBreakdown(target=target, subtotals=subtotals)


@dataclass
class AuditRecord:
    """Everything the audit knows about one graph and one target.

    delta and case_deltas are signed truth-minus-printed differences;
    diameter_ok records whether the aggregate's hypothesis (base diameter
    exactly 2) holds, which only constrains the Mycielskian target.
    """

    graph_id: str
    target: str
    params: GraphParameters
    diameter_ok: bool
    brute_force: int
    direct_cases: CaseBreakdown
    printed_cases: CaseBreakdown
    printed_theorem: int
    case_deltas: dict[PairClass, int]
    delta: int


def audit(g: Graph, target: str) -> AuditRecord:
    """Confront the printed formulas with brute force on one graph.

    brute_force is the Gutman index of the explicitly constructed target,
    computed independently of the class decomposition; a nonzero delta is
    a finding about the printed formula, never masked.
    """
    _check_audit_input(g)
    base_report = index_report(g)
    params = GraphParameters.from_report(base_report)

    derived = _build_target(g, target)
    brute = gutman(derived, distance_matrix(derived))

    direct = direct_class_sums(g, target)
    if target == "mu":
        printed_cases = thm5_cases_printed(params)
        printed_theorem = thm5_printed(params)
        diameter_ok = base_report.diameter == 2
    else:
        printed_cases = thm6_cases_printed(params)
        printed_theorem = thm6_printed(params)
        diameter_ok = True

    case_deltas = {
        pc: direct.subtotals[pc] - printed_cases.subtotals[pc] for pc in PairClass
    }
    return AuditRecord(
        graph_id=write_graph6(g),
        target=target,
        params=params,
        diameter_ok=diameter_ok,
        brute_force=brute,
        direct_cases=direct,
        printed_cases=printed_cases,
        printed_theorem=printed_theorem,
        case_deltas=case_deltas,
        delta=brute - printed_theorem,
    )
