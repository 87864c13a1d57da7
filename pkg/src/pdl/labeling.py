"""
Labelings and their verifiers.

A labeling is an injective map from vertices to 64-bit integers. Three
predicates are checked edge by edge:

- product-k: every edge gap has at most k prime factors (with multiplicity)
  and exceeds 1; optionally every pair of distinct vertices must differ by
  more than 1 (``all_pairs_gap``)
- power-k: every edge gap is p^j for a prime p and 1 <= j <= k
- strict-k: every edge gap is exactly p^k

Reports list every violation, not just the first.
"""

import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any

from pdl.errors import PreconditionError, UnknownVertexError
from pdl.graphs import Graph
from pdl.ntheory import (
    check_word,
    classify_prime_power,
    count_prime_factors,
    is_prime,
    strict_kth_power_base,
)


class LabelingMode(str, Enum):
    """Which labeling predicate to check."""

    PRODUCT = "product"
    POWER = "power"
    STRICT = "strict"


@dataclass
class Labeling:
    """An injective vertex -> integer map."""

    values: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        values = {int(v): int(label) for v, label in dict(self.values).items()}
        seen: dict[int, int] = {}
        for v in sorted(values):
            label = check_word(values[v], f"label of vertex {v}")
            if label in seen:
                raise PreconditionError(
                    f"Duplicate label {label} on vertices {seen[label]} and {v}"
                )
            seen[label] = v
        self.values = values

    @classmethod
    def from_sequence(cls, labels: Iterable[int]) -> "Labeling":
        """Label vertex i with the i-th value."""
        return cls(dict(enumerate(labels)))

    @classmethod
    def from_json(cls, data: str | Mapping[str, Any]) -> "Labeling":
        """Parse ``{"labels": {"0": int, ...}}``."""
        doc = json.loads(data) if isinstance(data, str) else data
        if not isinstance(doc, Mapping) or not isinstance(doc.get("labels"), Mapping):
            raise PreconditionError('Labeling JSON needs a "labels" object')
        try:
            return cls({int(v): int(label) for v, label in doc["labels"].items()})
        except (TypeError, ValueError) as e:
            raise PreconditionError(f"Labeling JSON has a non-integer entry: {e}") from e

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_dict(self) -> dict[str, Any]:
        return {"labels": {str(v): label for v, label in sorted(self.values.items())}}

    def __getitem__(self, vertex: int) -> int:
        try:
            return self.values[vertex]
        except KeyError:
            raise UnknownVertexError(f"Vertex {vertex} is not labeled") from None

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.values

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self.values)

    def as_sequence(self) -> list[int]:
        """Labels in vertex order."""
        return [self.values[v] for v in sorted(self.values)]

    def total_abs(self) -> int:
        """Sum of absolute values of all labels."""
        return sum(abs(x) for x in self.values.values())

    def shifted(self, delta: int) -> "Labeling":
        return Labeling({v: x + delta for v, x in self.values.items()})

    def negated(self) -> "Labeling":
        return Labeling({v: -x for v, x in self.values.items()})

    def scaled(self, factor: int) -> "Labeling":
        return Labeling({v: x * factor for v, x in self.values.items()})


@dataclass
class Violation:
    """One failing vertex pair."""

    u: int
    v: int
    gap: int
    reason: str
    """Category: 'gap_too_small', 'too_many_factors', 'not_prime_power', 'not_strict_power'."""

    message: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"u": self.u, "v": self.v, "gap": self.gap, "reason": self.reason}


@dataclass
class VerificationReport:
    """Outcome of checking a labeling against one predicate."""

    mode: LabelingMode
    k: int
    violations: list[Violation] = field(default_factory=list)
    edges_checked: int = 0
    all_pairs_gap: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def kind(self) -> str:
        return f"{self.mode.value}-{self.k}"

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    def get_violations_by_reason(self, reason: str) -> list[Violation]:
        return [v for v in self.violations if v.reason == reason]

    def to_summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        lines = [f"{self.kind} labeling: {status} ({self.edges_checked} edges checked)"]
        if self.violations:
            reasons: dict[str, int] = {}
            for v in self.violations:
                reasons[v.reason] = reasons.get(v.reason, 0) + 1
            for reason, count in sorted(reasons.items()):
                lines.append(f"  - {reason}: {count}")
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "mode": self.mode.value,
            "k": self.k,
            "ok": self.ok,
            "all_pairs_gap": self.all_pairs_gap,
            "edges_checked": self.edges_checked,
            "violations": [v.to_dict() for v in self.violations],
        }


def edge_gap(labeling: Labeling, u: int, v: int) -> int:
    """|L(u) - L(v)|."""
    if u == v:
        raise PreconditionError(f"edge_gap needs two distinct vertices, got {u} twice")
    return abs(labeling[u] - labeling[v])


def _check_domain(g: Graph, labeling: Labeling) -> None:
    if labeling.domain != frozenset(g.vertices):
        missing = sorted(set(g.vertices) - labeling.domain)
        extra = sorted(labeling.domain - set(g.vertices))
        raise PreconditionError(
            f"Labeling domain does not match the graph (missing {missing}, extra {extra})"
        )


def _check_k(k: int) -> None:
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")


def verify_product(
    g: Graph, labeling: Labeling, k: int, all_pairs_gap: bool = False
) -> VerificationReport:
    """
    Check a k-prime product labeling.

    Every edge gap must exceed 1 and have at most k prime factors. With
    ``all_pairs_gap`` every pair of distinct vertices must also differ by more
    than 1; by default only adjacent pairs are held to that rule.
    """
    _check_domain(g, labeling)
    _check_k(k)
    report = VerificationReport(LabelingMode.PRODUCT, k, all_pairs_gap=all_pairs_gap)
    for u, v in g.sorted_edges():
        gap = edge_gap(labeling, u, v)
        report.edges_checked += 1
        if gap <= 1:
            message = f"Edge ({u}, {v}) has gap {gap} <= 1"
            report.violations.append(Violation(u, v, gap, "gap_too_small", message))
            continue
        factors = count_prime_factors(gap)
        if factors > k:
            message = f"Edge ({u}, {v}) gap {gap} has {factors} prime factors > {k}"
            report.violations.append(Violation(u, v, gap, "too_many_factors", message))
    if all_pairs_gap:
        for u, v in combinations(sorted(labeling.domain), 2):
            gap = abs(labeling[u] - labeling[v])
            if not g.has_edge(u, v) and gap <= 1:
                message = f"Vertices {u} and {v} differ by only {gap}"
                report.violations.append(Violation(u, v, gap, "gap_too_small", message))
    return report


def verify_power(g: Graph, labeling: Labeling, k: int) -> VerificationReport:
    """Check that every edge gap is p^j with p prime and j <= k."""
    _check_domain(g, labeling)
    _check_k(k)
    report = VerificationReport(LabelingMode.POWER, k)
    for u, v in g.sorted_edges():
        gap = edge_gap(labeling, u, v)
        report.edges_checked += 1
        if gap < 2 or classify_prime_power(gap, k) is None:
            message = f"Edge ({u}, {v}) gap {gap} is not p^j, j <= {k}"
            report.violations.append(Violation(u, v, gap, "not_prime_power", message))
    return report


def verify_strict(g: Graph, labeling: Labeling, k: int) -> VerificationReport:
    """Check that every edge gap is exactly p^k."""
    _check_domain(g, labeling)
    _check_k(k)
    report = VerificationReport(LabelingMode.STRICT, k)
    for u, v in g.sorted_edges():
        gap = edge_gap(labeling, u, v)
        report.edges_checked += 1
        if gap < 2 or strict_kth_power_base(gap, k) is None:
            report.violations.append(
                Violation(u, v, gap, "not_strict_power", f"Edge ({u}, {v}) gap {gap} is not p^{k}")
            )
    return report


def verify(
    g: Graph, labeling: Labeling, mode: LabelingMode | str, k: int, all_pairs_gap: bool = False
) -> VerificationReport:
    """Dispatch to the verifier for `mode`."""
    mode = LabelingMode(mode)
    if mode is LabelingMode.PRODUCT:
        return verify_product(g, labeling, k, all_pairs_gap=all_pairs_gap)
    if mode is LabelingMode.POWER:
        return verify_power(g, labeling, k)
    return verify_strict(g, labeling, k)


def normalize(labeling: Labeling, anchor_vertex: int, sign_vertex: int) -> Labeling:
    """Translate so the anchor is 0, then negate if the sign vertex is negative."""
    if anchor_vertex == sign_vertex:
        raise PreconditionError("normalize needs distinct anchor and sign vertices")
    shifted = labeling.shifted(-labeling[anchor_vertex])
    return shifted.negated() if shifted[sign_vertex] < 0 else shifted


def coloring_from_labeling(labeling: Labeling, k: int) -> dict[int, int]:
    """
    Colour each vertex by its label mod 2^(k+1).

    For a k-prime product labeling this is a proper colouring with at most
    2^(k+1) colours, since equal residues force 2^(k+1) to divide the gap.
    """
    _check_k(k)
    modulus = 2 ** (k + 1)
    return {v: x % modulus for v, x in labeling.values.items()}


def lift_product_labeling(labeling: Labeling, prime: int) -> Labeling:
    """Multiply every label by a prime, turning a k-prime product labeling into a (k+1) one."""
    if not is_prime(prime):
        raise PreconditionError(f"{prime} is not prime")
    return labeling.scaled(prime)
