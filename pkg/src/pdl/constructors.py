"""
Constructive labelings.

Every constructor re-verifies its own output before returning it and raises
ConstructionError when that check fails.
"""

import logging
import math
from collections.abc import Iterable

import networkx as nx

from pdl.cycles import CycleLabelerTable, construct_cycle_strict
from pdl.errors import ApBudgetError, ConstructionError, GirthError, PreconditionError
from pdl.graphs import Graph, Partition, complete_graph, complete_multipartite, girth, girth_of
from pdl.labeling import (
    Labeling,
    LabelingMode,
    VerificationReport,
    normalize,
    verify,
    verify_strict,
)
from pdl.ntheory import (
    PrimeAP,
    ceil_log2,
    find_prime_ap,
    smallest_prime_power_above,
    twin_primes,
    verify_prime_ap,
)
from pdl.outerplanar import OuterplanarEmbedding, find_leaf_cycle

logger = logging.getLogger(__name__)

DEFAULT_AP_BUDGET = 10**6
DEFAULT_SIEVE_BUDGET = 10**6

K4_PRIME_LABELS = (0, 2, 5, 7)
K6_SQUARE_LABELS = (0, 2, 4, 7, 9, 11)
K122_LABELS = (0, 2, -2, 5, -5)


def _certify(
    g: Graph, labeling: Labeling, mode: LabelingMode, k: int, what: str, all_pairs_gap: bool = False
) -> Labeling:
    report: VerificationReport = verify(g, labeling, mode, k, all_pairs_gap=all_pairs_gap)
    if not report.ok:
        raise ConstructionError(f"{what} failed verification:\n{report.to_summary()}")
    return labeling


def complete_product_bound(n: int) -> int:
    """ceil(log2 n) - 1, the k reached by label_complete."""
    return ceil_log2(n) - 1


def label_complete(n: int) -> Labeling:
    """
    Product labeling of K_n with k = ceil(log2 n) - 1.

    Vertex i (1-based) gets 2i when i <= n/2 and 2i + 1 otherwise. All pairs
    differ by more than 1, so it is checked with ``all_pairs_gap``.
    """
    if n < 3:
        raise PreconditionError(f"label_complete needs n >= 3, got {n}")
    labels = [2 * i if 2 * i <= n else 2 * i + 1 for i in range(1, n + 1)]
    return _certify(
        complete_graph(n),
        Labeling.from_sequence(labels),
        LabelingMode.PRODUCT,
        complete_product_bound(n),
        f"K_{n} labeling",
        all_pairs_gap=True,
    )


def label_complete_power(n: int) -> tuple[Labeling, int]:
    """
    Prime-power labeling of K_n for n <= 6.

    Returns:
        (labeling, k): k = 1 from 0, 2, 5, 7 for n <= 4; k = 2 from
        0, 2, 4, 7, 9, 11 for n = 5, 6.

    Raises:
        PreconditionError: For n >= 7, where four labels always share a parity
            and their pairwise gaps cannot all be powers of 2.
    """
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if n >= 7:
        raise PreconditionError(
            f"K_{n} has no prime power labeling: some four labels share a parity"
        )
    labels, k = (K4_PRIME_LABELS, 1) if n <= 4 else (K6_SQUARE_LABELS, 2)
    labeling = Labeling.from_sequence(labels[:n])
    return _certify(complete_graph(n), labeling, LabelingMode.POWER, k, f"K_{n} power labeling"), k


def find_equal_parity_quadruple(labeling: Labeling) -> tuple[int, int, int, int]:
    """Four vertices whose labels share a parity; exists once there are 7 labels."""
    if len(labeling) < 7:
        raise PreconditionError(f"Need at least 7 labels, got {len(labeling)}")
    by_parity: dict[int, list[int]] = {0: [], 1: []}
    for v in sorted(labeling.domain):
        by_parity[labeling[v] % 2].append(v)
    group = max(by_parity.values(), key=len)
    return tuple(group[:4])  # type: ignore[return-value]


def required_ap_length(k: int, j: int) -> int:
    """AP length used by label_multipartite_via_ap for k parts of size <= j."""
    fact = math.factorial(k)
    return max(j * fact, 2 * (j - 1) * fact) + 1


def multipartite_product_bound(k: int) -> int:
    return max(1, ceil_log2(k))


def label_multipartite_via_ap(
    g: Graph,
    parts: Partition,
    budget: int = DEFAULT_AP_BUDGET,
    ap: PrimeAP | None = None,
    sieve_limit: int = 10**6,
) -> Labeling:
    """
    Product labeling from a prime arithmetic progression p, p + d, ....

    The r-th vertex of part x (both 1-based) gets x*(p + M*d) + r*k!*d with
    M = (j - 1)*k!, so the gap between parts x > y is (x - y) times the term
    p + c*d with 0 <= c <= 2M. Every edge gap therefore has at most
    max(1, ceil(log2 k)) prime factors.

    Args:
        g: Graph to label.
        parts: Proper colouring of g with k >= 2 parts.
        budget: Candidate budget for the AP search.
        ap: Pre-verified progression to use instead of searching.
        sieve_limit: Sieve bound for the AP search.

    Raises:
        PreconditionError: If parts is not a proper colouring or ap is too short.
        ApBudgetError: If no long enough progression is found.
    """
    if not parts.is_proper_coloring(g):
        raise PreconditionError("Partition is not a proper colouring of the graph")
    k = parts.k
    if k < 2:
        raise PreconditionError("label_multipartite_via_ap needs at least two parts")
    j = parts.max_part_size
    length = required_ap_length(k, j)
    if ap is None:
        ap = find_prime_ap(length, budget, sieve_limit)
        if ap is None:
            raise ApBudgetError(budget, length)
    elif ap.length < length or not verify_prime_ap(ap):
        raise PreconditionError(f"Supplied AP must be verified and have length >= {length}")
    fact = math.factorial(k)
    centre = ap.first + (j - 1) * fact * ap.step
    values = {}
    for x, part in enumerate(parts.parts, start=1):
        for r, v in enumerate(sorted(part), start=1):
            values[v] = x * centre + r * fact * ap.step
    logger.debug("Multipartite labeling from AP first=%d step=%d", ap.first, ap.step)
    return _certify(
        g,
        Labeling(values),
        LabelingMode.PRODUCT,
        multipartite_product_bound(k),
        f"{k}-partite AP labeling",
    )


def label_K11c(c: int, budget: int = DEFAULT_SIEVE_BUDGET) -> Labeling:
    """
    Prime distance labeling of K_{1,1,c}: x = 0, y = 2, z_i = p_i + 2.

    Uses the first c twin pairs (p_i, p_i + 2), so it exists exactly as far as
    twin primes do.
    """
    pairs = twin_primes(c, budget)
    g, _ = complete_multipartite([1, 1, c])
    labeling = Labeling.from_sequence([0, 2] + [pair.upper for pair in pairs])
    return _certify(g, labeling, LabelingMode.POWER, 1, f"K_(1,1,{c}) labeling")


def label_K122() -> Labeling:
    """Prime distance labeling of K_{1,2,2}: 0, then 2, -2 and 5, -5."""
    g, _ = complete_multipartite([1, 2, 2])
    return _certify(g, Labeling.from_sequence(K122_LABELS), LabelingMode.POWER, 1, "K_(1,2,2)")


class _OuterplanarLabeler:
    """Recursive strict labeler for outerplanar graphs of large girth."""

    def __init__(self, k: int, table: CycleLabelerTable, required_girth: int) -> None:
        self.k = k
        self.table = table
        self.required_girth = required_girth

    def big_prime_power(self, bound: int, avoid: int = 0) -> int:
        p, power = smallest_prime_power_above(bound, self.k)
        while power == avoid:
            p, power = smallest_prime_power_above(bound, self.k, p + 1)
        return power

    def label(self, g: nx.Graph, embeddings: list[OuterplanarEmbedding]) -> dict[int, int]:
        if g.number_of_nodes() == 0:
            return {}
        found = girth_of(g.adj)
        if found is not None and found < self.required_girth:
            raise GirthError(found, self.required_girth)
        if not nx.is_connected(g):
            return self._label_components(g, embeddings)
        if g.number_of_nodes() == 1:
            return {next(iter(g.nodes)): 0}
        pendant = min((v for v, d in g.degree if d == 1), default=None)
        if pendant is not None:
            return self._label_pendant(g, embeddings, pendant)
        if all(d == 2 for _, d in g.degree):
            return self._label_cycle(g)
        return self._label_leaf_cycle(g, embeddings)

    def _label_components(self, g: nx.Graph, embeddings) -> dict[int, int]:
        labels: dict[int, int] = {}
        for comp in sorted(nx.connected_components(g), key=min):
            part = self.label(g.subgraph(comp).copy(), embeddings)
            if labels:
                offset = max(labels.values()) + 1 - min(part.values())
                part = {v: x + offset for v, x in part.items()}
            labels.update(part)
        return labels

    def _label_pendant(self, g: nx.Graph, embeddings, x: int) -> dict[int, int]:
        y = next(iter(g.neighbors(x)))
        rest = g.copy()
        rest.remove_node(x)
        labels = self.label(rest, embeddings)
        # L(x) exceeds every label so far
        power = self.big_prime_power(max(labels.values()) - labels[y])
        labels[x] = labels[y] + power
        return labels

    def _label_cycle(self, g: nx.Graph) -> dict[int, int]:
        start = min(g.nodes)
        order = [u for u, _ in nx.find_cycle(g, source=start)]
        base = construct_cycle_strict(len(order), self.k, self.table)
        if base is None:
            raise ConstructionError(f"No constructive labeling of C_{len(order)} for k={self.k}")
        return dict(zip(order, base.as_sequence(), strict=True))

    def _label_leaf_cycle(self, g: nx.Graph, embeddings) -> dict[int, int]:
        leaf = find_leaf_cycle(g, embeddings)
        cycle = leaf.cycle
        x, y = cycle[0], cycle[1]
        z, inner, (a, b, c) = cycle[2], list(cycle[3:-3]), cycle[-3:]
        reduced = g.copy()
        reduced.remove_nodes_from(cycle[2:])
        reduced.add_edge(x, y)
        rest_embeddings = [e for e in embeddings if e is not leaf.embedding]
        smaller = leaf.reduced_embedding()
        if smaller is not None:
            rest_embeddings.append(smaller)
        logger.debug("Leaf cycle %s attached at %s", cycle, leaf.attachment)

        first = Labeling(self.label(reduced, rest_embeddings))
        first = normalize(first, x, y)
        p_power = first[y]
        inner_base = construct_cycle_strict(len(inner), self.k, self.table)
        if inner_base is None:
            raise ConstructionError(f"No constructive labeling of C_{len(inner)} for k={self.k}")
        base_seq = inner_base.as_sequence()
        m = len(base_seq)
        # covers the absolute sum of every translate of the inner labeling tried below
        bound = first.total_abs() + m * (max(base_seq) - min(base_seq))
        r_power = self.big_prime_power(bound)
        q_power = self.big_prime_power(bound, avoid=r_power)
        whole = Graph.from_networkx(g)
        index = {v: i for i, v in enumerate(sorted(g.nodes))}

        for shift in range(m):
            for step in (1, -1):
                seq = [base_seq[(shift + step * i) % m] for i in range(m)]
                seq = [s - seq[0] for s in seq]
                if seq[1] < 0:
                    seq = [-s for s in seq]
                labels = dict(first.values)
                labels[z] = p_power + r_power
                labels[inner[0]] = p_power + r_power + seq[1]
                for v, s in zip(inner[1:], seq[1:], strict=True):
                    labels[v] = s + p_power + r_power + q_power
                labels[a] = p_power + r_power + q_power
                labels[b] = r_power + q_power
                labels[c] = r_power
                if len(set(labels.values())) != len(labels):
                    continue
                relabeled = Labeling({index[v]: x for v, x in labels.items()})
                if verify_strict(whole, relabeled, self.k).ok:
                    return labels
        raise ConstructionError(f"Every orientation of the inner cycle collides on {cycle}")


def label_outerplanar(
    g: Graph,
    embeddings: Iterable[OuterplanarEmbedding] = (),
    k: int = 1,
    table: CycleLabelerTable | None = None,
) -> Labeling:
    """
    Strict prime kth-power labeling of an outerplanar graph of large girth.

    Recursion: components are labeled apart with disjoint ranges; a pendant
    vertex x with neighbour y gets L(y) + P^k for the smallest prime power
    putting it above every other label; a lone cycle uses the cycle labeler.
    Otherwise a leaf cycle C = x, y, z, x_1..x_m, a, b, c is cut off,
    (G - C) + xy is labeled with L(x) = 0 and L(y) = p^k, and C gets
    z = p^k + r^k, x_1 = p^k + r^k + s^k, x_i = L_2(x_i) + p^k + r^k + q^k,
    a = p^k + r^k + q^k, b = r^k + q^k, c = r^k.

    Args:
        g: Outerplanar graph.
        embeddings: Embeddings of blocks that have chords.
        k: Exponent.
        table: Cycle table giving the ppc(k) upper bound in use.

    Raises:
        GirthError: If girth(g) < ppc(k) + 6 (checked at every recursion step).
        ConstructionError: If the result fails re-verification.
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    table = table or CycleLabelerTable()
    required = table.ppc_upper_bound(k) + 6
    found = girth(g)
    if found is not None and found < required:
        raise GirthError(found, required)
    labeler = _OuterplanarLabeler(k, table, required)
    labels = labeler.label(g.to_networkx(), list(embeddings))
    report = verify_strict(g, Labeling(labels), k)
    if not report.ok:
        raise ConstructionError(f"Outerplanar labeling failed verification:\n{report.to_summary()}")
    return Labeling(labels)
