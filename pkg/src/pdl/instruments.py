"""
Instruments built on search and the constructors: prime product number
bounds, the ppc(k) scan over cycles, and the equal-parity K_4 demonstration.

None of them ever claims more than the bounded evidence it gathered.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from pdl.constructors import (
    find_equal_parity_quadruple,
    label_complete,
    label_multipartite_via_ap,
)
from pdl.cycles import CycleLabelerTable, construct_cycle_strict
from pdl.errors import BudgetExhaustedError, PreconditionError
from pdl.graphs import Graph, complete_graph, cycle_graph, optimal_coloring
from pdl.labeling import Labeling, LabelingMode
from pdl.ntheory import ceil_log2
from pdl.search import SearchConfig, SearchOutcome, SearchStatus, search_labeling

logger = logging.getLogger(__name__)


@dataclass
class PpnBounds:
    """Lower and upper bounds on the prime product number of a graph."""

    lower: int
    upper: int | None
    chromatic_number: int
    certificate: Labeling | None = None
    source: str = ""
    """How the upper bound was certified: 'complete', 'search' or 'ap-construction'."""

    evidence: list[str] = field(default_factory=list)
    outcomes: list[SearchOutcome] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.upper == self.lower

    def to_dict(self) -> dict[str, Any]:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "chromatic_number": self.chromatic_number,
            "source": self.source,
            "certificate": self.certificate.to_dict()["labels"] if self.certificate else None,
            "evidence": list(self.evidence),
            "searches": [o.to_dict() for o in self.outcomes],
        }


def ppn_bounds(
    g: Graph,
    cfg: SearchConfig | None = None,
    graph_name: str = "G",
    chromatic_budget: int = 10**6,
    ap_budget: int = 10**6,
) -> PpnBounds:
    """
    Bound ppn(G) from below by colouring and from above by a certificate.

    lower = max(1, ceil(log2 chi) - 1), since a k-prime product labeling
    yields a proper 2^(k+1)-colouring. The upper bound is the first k in
    (lower, lower + 1) with a certificate: label_complete for complete graphs,
    otherwise bounded search and then the AP construction.
    """
    cfg = cfg or SearchConfig()
    coloring = optimal_coloring(g, chromatic_budget)
    chi = coloring.chromatic_number
    lower = max(1, ceil_log2(max(chi, 1)) - 1)
    result = PpnBounds(lower=lower, upper=None, chromatic_number=chi)
    n = g.vertex_count

    if n >= 3 and g.edges == complete_graph(n).edges:
        result.upper = lower
        result.certificate = label_complete(n)
        result.source = "complete"
        return result

    for k in (lower, lower + 1):
        outcome = search_labeling(
            g, cfg.replace(mode=LabelingMode.PRODUCT, k=k), graph_name=graph_name
        )
        result.outcomes.append(outcome)
        if outcome.found:
            result.upper = k
            result.certificate = outcome.certificate
            result.source = "search"
            return result
        result.evidence.append(outcome.describe())

    if chi >= 2:
        parts = coloring.color_classes()
        try:
            result.certificate = label_multipartite_via_ap(g, parts, ap_budget)
            result.upper = max(1, ceil_log2(chi))
            result.source = "ap-construction"
        except BudgetExhaustedError as e:
            result.evidence.append(str(e))
    return result


class PpcStatus(str, Enum):
    CONSTRUCTED = "constructed"
    FOUND = "found-by-search"
    UNKNOWN = "unknown"


@dataclass
class PpcEntry:
    n: int
    status: PpcStatus
    certificate: Labeling | None = None
    search: SearchOutcome | None = None
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "status": self.status.value,
            "certificate": self.certificate.as_sequence() if self.certificate else None,
            "search": self.search.to_dict() if self.search else None,
            "note": self.note,
        }


@dataclass
class PpcScan:
    k: int
    entries: list[PpcEntry]
    table_base_length: int

    def entry(self, n: int) -> PpcEntry:
        return next(e for e in self.entries if e.n == n)

    def to_summary(self) -> str:
        lines = [f"Strict prime {self.k}th-power labelings of cycles (bounded evidence only)"]
        for e in self.entries:
            lines.append(f"  C_{e.n}: {e.status.value}" + (f" - {e.note}" if e.note else ""))
        lines.append(
            f"  Every cycle of length >= {self.table_base_length} is constructible; "
            "ppc itself is not determined by this scan."
        )
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "constructible_from": self.table_base_length,
            "entries": [e.to_dict() for e in self.entries],
        }


def ppc_scan(
    k: int, n_max: int, cfg: SearchConfig | None = None, table: CycleLabelerTable | None = None
) -> PpcScan:
    """
    For each 3 <= n <= n_max, try to construct then search for a strict
    kth-power labeling of C_n and record what happened.
    """
    if n_max < 3:
        raise PreconditionError(f"n_max must be >= 3, got {n_max}")
    cfg = (cfg or SearchConfig()).replace(mode=LabelingMode.STRICT, k=k)
    table = table or CycleLabelerTable()
    entries = []
    for n in range(3, n_max + 1):
        constructed = construct_cycle_strict(n, k, table)
        if constructed is not None:
            entries.append(PpcEntry(n, PpcStatus.CONSTRUCTED, constructed))
            continue
        outcome = search_labeling(cycle_graph(n), cfg, graph_name=f"C_{n}")
        if outcome.found:
            entries.append(PpcEntry(n, PpcStatus.FOUND, outcome.certificate, outcome))
        else:
            entries.append(PpcEntry(n, PpcStatus.UNKNOWN, None, outcome, outcome.describe()))
        logger.info("ppc scan C_%d: %s", n, outcome.describe())
    return PpcScan(k, entries, table.ppc_upper_bound(k))


@dataclass
class TwoPowerDemo:
    """Why K_n has no prime power labeling for n >= 7."""

    k: int
    search: SearchOutcome
    witness_labeling: Labeling
    quadruple: tuple[int, int, int, int]

    @property
    def as_expected(self) -> bool:
        return self.search.status is SearchStatus.EXHAUSTED

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "search": self.search.to_dict(),
            "k7_labels": self.witness_labeling.as_sequence(),
            "equal_parity_vertices": list(self.quadruple),
        }


def twopower_demo(k: int, cfg: SearchConfig | None = None) -> TwoPowerDemo:
    """
    Search K_4 for a prime kth-power labeling with all labels of one parity.

    All gaps would then be even prime powers, i.e. powers of 2, which four
    distinct integers cannot realise pairwise. Alongside, any labeling of K_7
    (here label_complete(7)) is shown to contain four labels of equal parity.
    """
    cfg = (cfg or SearchConfig()).replace(mode=LabelingMode.POWER, k=k, label_step=2)
    outcome = search_labeling(complete_graph(4), cfg, graph_name="K_4")
    labels = label_complete(7)
    return TwoPowerDemo(k, outcome, labels, find_equal_parity_quadruple(labels))
