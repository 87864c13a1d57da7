"""
Bounded exhaustive search for labelings.

The search is the independent oracle behind every nonexistence claim in the
package. An ``exhausted`` outcome is evidence relative to the label bound B
only, and every description of it says so.
"""

import logging
import time
from dataclasses import dataclass, field, replace
from enum import Enum
from multiprocessing import Pool
from typing import Any

import numpy as np

from pdl.errors import ConstructionError, PreconditionError
from pdl.graphs import Graph
from pdl.labeling import Labeling, LabelingMode, verify
from pdl.ntheory import omega_table, prime_powers_up_to

logger = logging.getLogger(__name__)

DEFAULT_LABEL_BOUND = 100
DEFAULT_NODE_BUDGET = 10**7


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of a bounded labeling search."""

    label_bound: int = DEFAULT_LABEL_BOUND
    """B: with the symmetry quotient, labelings whose span is at most 2B (those
    fitting in [-B, B] after translation); without it, labels in [-B, B]."""

    mode: LabelingMode = LabelingMode.PRODUCT
    k: int = 1
    node_budget: int = DEFAULT_NODE_BUDGET
    """Maximum number of partial assignments explored; worker processes share it evenly."""

    symmetry: bool = True
    """Anchor the first vertex at 0 and force the second positive."""

    deterministic: bool = False
    """Force sequential search even when jobs > 1."""

    jobs: int = 1
    all_pairs_gap: bool = False
    """Product mode: also require gap > 1 between non-adjacent vertices."""

    label_step: int = 1
    """Only labelings whose labels are all congruent modulo this step."""

    collect_all: bool = False
    """Keep searching after the first certificate."""

    max_certificates: int = 1000

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", LabelingMode(self.mode))
        if self.label_bound < 2:
            raise PreconditionError(f"label_bound must be >= 2, got {self.label_bound}")
        if self.node_budget < 1:
            raise PreconditionError(f"node_budget must be >= 1, got {self.node_budget}")
        if self.k < 1:
            raise PreconditionError(f"k must be >= 1, got {self.k}")
        if self.jobs < 1:
            raise PreconditionError(f"jobs must be >= 1, got {self.jobs}")
        if self.label_step < 1:
            raise PreconditionError(f"label_step must be >= 1, got {self.label_step}")
        if self.max_certificates < 1:
            raise PreconditionError("max_certificates must be >= 1")

    def replace(self, **changes: Any) -> "SearchConfig":
        return replace(self, **changes)

    @property
    def kind(self) -> str:
        return f"{self.mode.value}-{self.k}"


class SearchStatus(str, Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    BUDGET_OUT = "budget_out"


@dataclass
class SearchOutcome:
    """Result of search_labeling."""

    status: SearchStatus
    config: SearchConfig
    graph_name: str = "G"
    certificate: Labeling | None = None
    certificates: list[Labeling] = field(default_factory=list)
    nodes_explored: int = 0
    wall_time: float = 0.0

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND

    def bound_phrase(self) -> str:
        cfg = self.config
        if cfg.symmetry:
            phrase = f"|labels| <= {cfg.label_bound} (up to translation)"
        else:
            phrase = f"|labels| <= {cfg.label_bound}"
        if cfg.label_step > 1:
            phrase += f", all labels congruent mod {cfg.label_step}"
        return phrase

    def describe(self) -> str:
        """One line, always qualified by the bound for negative results."""
        kind = self.config.kind
        if self.status is SearchStatus.FOUND:
            count = len(self.certificates)
            extra = f" ({count} certificates)" if self.config.collect_all else ""
            return f"found a {kind} labeling of {self.graph_name}{extra}"
        if self.status is SearchStatus.EXHAUSTED:
            return f"no {kind} labeling of {self.graph_name} with {self.bound_phrase()}"
        return (
            f"search for a {kind} labeling of {self.graph_name} with {self.bound_phrase()} "
            f"stopped after {self.nodes_explored} nodes (budget {self.config.node_budget})"
        )

    def to_dict(self) -> dict[str, Any]:
        cfg = self.config
        return {
            "status": self.status.value,
            "kind": cfg.kind,
            "graph": self.graph_name,
            "label_bound": cfg.label_bound,
            "symmetry": cfg.symmetry,
            "label_step": cfg.label_step,
            "all_pairs_gap": cfg.all_pairs_gap,
            "node_budget": cfg.node_budget,
            "nodes_explored": self.nodes_explored,
            "wall_time": round(self.wall_time, 6),
            "certificate": self.certificate.to_dict()["labels"] if self.certificate else None,
            "certificate_count": len(self.certificates),
            "summary": self.describe(),
        }


def allowed_gaps(cfg: SearchConfig) -> frozenset[int]:
    """Every edge gap up to 2B that the predicate accepts."""
    limit = 2 * cfg.label_bound
    if cfg.mode is LabelingMode.PRODUCT:
        omega = omega_table(limit)
        gaps = np.nonzero((omega >= 1) & (omega <= cfg.k))[0]
        values = [int(g) for g in gaps if g >= 2]
    else:
        values = prime_powers_up_to(limit, cfg.k, exact=cfg.mode is LabelingMode.STRICT)
    return frozenset(g for g in values if g % cfg.label_step == 0)


def search_order(g: Graph) -> list[int]:
    """Max-degree vertex first, then vertices with the most already-ordered neighbours."""
    if g.vertex_count == 0:
        return []
    order = [max(g.vertices, key=lambda v: (g.degree(v), -v))]
    placed = set(order)
    while len(order) < g.vertex_count:
        nxt = max(
            (v for v in g.vertices if v not in placed),
            key=lambda v: (len(g.neighbors(v) & placed), g.degree(v), -v),
        )
        order.append(nxt)
        placed.add(nxt)
    return order


class _BudgetOut(Exception):
    pass


@dataclass
class _Problem:
    """Read-only description shared by all workers."""

    graph: Graph
    config: SearchConfig
    order: list[int]
    gaps: frozenset[int]
    sorted_gaps: tuple[int, ...]


class _Searcher:
    """Depth-first label assignment along a fixed vertex order."""

    def __init__(self, problem: _Problem) -> None:
        self.p = problem
        self.cfg = problem.config
        self.g = problem.graph
        self.labels: dict[int, int] = {}
        self.used: set[int] = set()
        self.nodes = 0
        self.found: list[dict[int, int]] = []

    def candidates(self, depth: int) -> list[int]:
        v = self.p.order[depth]
        cfg = self.cfg
        bound = cfg.label_bound
        if cfg.symmetry:
            if depth == 0:
                return [0]
            lo = max(self.labels.values()) - 2 * bound
            hi = min(self.labels.values()) + 2 * bound
        else:
            lo, hi = -bound, bound
        labeled = [w for w in self.g.neighbors(v) if w in self.labels]
        if labeled:
            anchor = self.labels[min(labeled, key=lambda w: self.p.order.index(w))]
            pool = [anchor - d for d in reversed(self.p.sorted_gaps)]
            pool += [anchor + d for d in self.p.sorted_gaps]
        else:
            pool = list(range(lo, hi + 1))
        result = []
        for x in pool:
            if x < lo or x > hi or x in self.used:
                continue
            if self.labels and (x - next(iter(self.labels.values()))) % cfg.label_step:
                continue
            if cfg.symmetry and depth == 1 and x <= 0:
                continue
            if any(abs(x - self.labels[w]) not in self.p.gaps for w in labeled):
                continue
            if cfg.all_pairs_gap and cfg.mode is LabelingMode.PRODUCT:
                if any(abs(x - y) <= 1 for y in self.used):
                    continue
            result.append(x)
        return result

    def run(self, prefix: dict[int, int] | None = None) -> None:
        for v, x in (prefix or {}).items():
            self.labels[v] = x
            self.used.add(x)
        self._extend(len(self.labels))

    def _extend(self, depth: int) -> bool:
        """Return True to stop the whole search."""
        if depth == len(self.p.order):
            self.found.append(dict(self.labels))
            return not self.cfg.collect_all or len(self.found) >= self.cfg.max_certificates
        v = self.p.order[depth]
        for x in self.candidates(depth):
            self.nodes += 1
            if self.nodes > self.cfg.node_budget:
                raise _BudgetOut
            self.labels[v] = x
            self.used.add(x)
            stop = self._extend(depth + 1)
            del self.labels[v]
            self.used.discard(x)
            if stop:
                return True
        return False


def _explore(args: tuple[_Problem, dict[int, int]]) -> tuple[list[dict[int, int]], int, bool]:
    problem, prefix = args
    searcher = _Searcher(problem)
    try:
        searcher.run(prefix)
        out = False
    except _BudgetOut:
        out = True
    return searcher.found, searcher.nodes, out


def _key(problem: _Problem, labels: dict[int, int]) -> tuple[int, ...]:
    return tuple(labels[v] for v in problem.order)


def search_labeling(g: Graph, cfg: SearchConfig, graph_name: str = "G") -> SearchOutcome:
    """
    Search for a labeling of g under cfg's predicate with labels bounded by B.

    Vertices are labeled in search_order. A candidate label must be unused,
    keep the labeling inside the bound, give an allowed gap to every labeled
    neighbour and, in product mode with ``all_pairs_gap``, differ by more than
    1 from every label so far. With ``jobs > 1`` the choices for the second
    vertex are split across worker processes; the reported certificate is the
    lexicographically first in search order either way.

    Returns:
        found (certificate verified), exhausted (nothing within the bound), or
        budget_out (node budget hit first).
    """
    if g.vertex_count == 0:
        raise PreconditionError("search_labeling needs a non-empty graph")
    start = time.perf_counter()
    gaps = allowed_gaps(cfg)
    problem = _Problem(g, cfg, search_order(g), gaps, tuple(sorted(gaps)))
    parallel = cfg.jobs > 1 and not cfg.deterministic and g.vertex_count >= 3

    if parallel:
        found, nodes, out = _search_parallel(problem)
    else:
        found, nodes, out = _explore((problem, {}))

    found.sort(key=lambda labels: _key(problem, labels))
    if cfg.collect_all:
        found = found[: cfg.max_certificates]
    else:
        found = found[:1]
    certificates = [Labeling(labels) for labels in found]
    for cert in certificates:
        if not verify(g, cert, cfg.mode, cfg.k, all_pairs_gap=cfg.all_pairs_gap).ok:
            raise ConstructionError(f"Search returned an invalid certificate {cert.values}")
    if certificates:
        status = SearchStatus.FOUND
    elif out:
        status = SearchStatus.BUDGET_OUT
    else:
        status = SearchStatus.EXHAUSTED
    outcome = SearchOutcome(
        status=status,
        config=cfg,
        graph_name=graph_name,
        certificate=certificates[0] if certificates else None,
        certificates=certificates,
        nodes_explored=nodes,
        wall_time=time.perf_counter() - start,
    )
    logger.debug("%s in %d nodes", outcome.describe(), nodes)
    return outcome


def _merge_worker_results(
    results: list[tuple[list[dict[int, int]], int, bool]], collect_all: bool
) -> tuple[list[dict[int, int]], bool]:
    """
    Combine per-prefix results, given in ascending prefix order.

    Without collect_all a certificate is accepted only when every smaller
    prefix finished without running out of budget, so the answer matches the
    sequential search; an earlier budget-out makes the whole search budget_out.
    """
    if collect_all:
        found = [labels for part, _, _ in results for labels in part]
        return found, any(hit for _, _, hit in results)
    for part, _, hit in results:
        if part:
            return part[:1], False
        if hit:
            return [], True
    return [], False


def _search_parallel(problem: _Problem) -> tuple[list[dict[int, int]], int, bool]:
    """Split on the labels of the first two vertices; the node budget is shared evenly."""
    seed = _Searcher(problem)
    first, second = problem.order[0], problem.order[1]
    prefixes = []
    for x0 in seed.candidates(0):
        seed.labels[first] = x0
        seed.used.add(x0)
        prefixes.extend({first: x0, second: x1} for x1 in seed.candidates(1))
        del seed.labels[first]
        seed.used.discard(x0)
    if not prefixes:
        return [], 0, False
    share = max(1, problem.config.node_budget // len(prefixes))
    task = replace(problem, config=problem.config.replace(node_budget=share))
    with Pool(problem.config.jobs) as pool:
        results = pool.map(_explore, [(task, prefix) for prefix in prefixes])
    nodes = len(prefixes) + sum(count for _, count, _ in results)
    found, out = _merge_worker_results(results, problem.config.collect_all)
    return found, nodes, out
