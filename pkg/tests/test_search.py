"""Tests for the bounded labeling search."""

import itertools

import pytest

from pdl.errors import PreconditionError
from pdl.graphs import Graph, complete_graph, complete_multipartite, cycle_graph, path_graph
from pdl.labeling import LabelingMode, verify
from pdl.ntheory import classify_prime_power, count_prime_factors, strict_kth_power_base
from pdl.search import (
    SearchConfig,
    SearchStatus,
    _merge_worker_results,
    allowed_gaps,
    search_labeling,
    search_order,
)


class TestSearchConfig:
    """Test configuration validation."""

    def test_defaults(self) -> None:
        """Test the default bound and budget."""
        cfg = SearchConfig()
        assert cfg.label_bound == 100
        assert cfg.node_budget == 10**7
        assert cfg.kind == "product-1"

    def test_mode_from_string(self) -> None:
        """Test that modes may be given by name."""
        config = SearchConfig(mode="strict", k=2)  # type: ignore[arg-type]
        assert config.mode is LabelingMode.STRICT

    @pytest.mark.parametrize(
        "changes",
        [{"label_bound": 1}, {"node_budget": 0}, {"k": 0}, {"jobs": 0}, {"label_step": 0}],
    )
    def test_rejects_invalid(self, changes: dict) -> None:
        """Test each numeric precondition."""
        with pytest.raises(PreconditionError):
            SearchConfig(**changes)


class TestAllowedGaps:
    """Test gap tables."""

    def test_product_gaps(self) -> None:
        """Test product-2 gaps up to 2B."""
        gaps = allowed_gaps(SearchConfig(label_bound=5, k=2))
        assert sorted(gaps) == [2, 3, 4, 5, 6, 7, 9, 10]

    def test_strict_gaps(self) -> None:
        """Test strict squares."""
        gaps = allowed_gaps(SearchConfig(label_bound=30, mode=LabelingMode.STRICT, k=2))
        assert sorted(gaps) == [4, 9, 25, 49]

    def test_label_step_filters(self) -> None:
        """Test that only multiples of the step survive."""
        config = SearchConfig(label_bound=10, mode=LabelingMode.POWER, k=3, label_step=2)
        gaps = allowed_gaps(config)
        assert sorted(gaps) == [2, 4, 8]


class TestSearchOrder:
    """Test the vertex order."""

    def test_highest_degree_first(self) -> None:
        """Test that the centre of a star comes first."""
        g = Graph.from_edges(4, [(3, 0), (3, 1), (3, 2)])
        assert search_order(g)[0] == 3

    def test_connected_prefix(self) -> None:
        """Test that every later vertex has an earlier neighbour on a path."""
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        order = search_order(g)
        for i, v in enumerate(order[1:], start=1):
            assert g.neighbors(v) & set(order[:i])


class TestSearchLabeling:
    """Test search outcomes."""

    def test_k122_certificates(self) -> None:
        """Test that every K_{1,2,2} certificate is 0, +-2, +-5 split by part."""
        g, parts = complete_multipartite([1, 2, 2])
        cfg = SearchConfig(label_bound=30, collect_all=True)
        outcome = search_labeling(g, cfg, "K_{1,2,2}")
        assert outcome.status is SearchStatus.FOUND
        assert len(outcome.certificates) == 4
        for cert in outcome.certificates:
            shifted = cert.shifted(-cert[0])
            assert sorted(shifted.as_sequence()) == [-5, -2, 0, 2, 5]
            pair_sets = {frozenset(shifted[v] for v in part) for part in parts.parts[1:]}
            assert pair_sets == {frozenset({2, -2}), frozenset({5, -5})}

    def test_certificate_verifies(self) -> None:
        """Test a found K_4 power-1 labeling."""
        g = complete_graph(4)
        outcome = search_labeling(g, SearchConfig(label_bound=10, mode=LabelingMode.POWER))
        assert outcome.found
        assert outcome.certificate is not None
        assert verify(g, outcome.certificate, LabelingMode.POWER, 1).ok
        assert outcome.to_dict()["certificate_count"] == 1

    def test_exhausted_is_qualified(self) -> None:
        """Test that a negative answer names its bound."""
        cfg = SearchConfig(label_bound=20, mode=LabelingMode.STRICT, label_step=2)
        outcome = search_labeling(cycle_graph(4), cfg, "C_4")
        assert outcome.status is SearchStatus.EXHAUSTED
        assert outcome.certificate is None
        assert "|labels| <= 20 (up to translation)" in outcome.describe()
        assert "congruent mod 2" in outcome.describe()

    def test_budget_out(self) -> None:
        """Test that a tiny node budget stops the search."""
        g, _ = complete_multipartite([2, 2, 2])
        outcome = search_labeling(g, SearchConfig(label_bound=50, node_budget=10))
        assert outcome.status is SearchStatus.BUDGET_OUT
        assert "stopped after" in outcome.describe()

    def test_without_symmetry(self) -> None:
        """Test labels in [-B, B] without the translation quotient."""
        cfg = SearchConfig(label_bound=3, mode=LabelingMode.POWER, symmetry=False)
        outcome = search_labeling(complete_graph(3), cfg)
        assert outcome.found and outcome.certificate is not None
        assert all(abs(x) <= 3 for x in outcome.certificate.as_sequence())

    def test_all_pairs_gap_prunes(self) -> None:
        """Test that non-adjacent labels differing by 1 are refused when asked."""
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        cfg = SearchConfig(label_bound=5, all_pairs_gap=True, collect_all=True)
        outcome = search_labeling(g, cfg)
        assert outcome.found
        for cert in outcome.certificates:
            assert abs(cert[0] - cert[2]) > 1

    def test_parallel_matches_sequential(self) -> None:
        """Test that worker processes report the same first certificate."""
        g, _ = complete_multipartite([1, 2, 2])
        sequential = search_labeling(g, SearchConfig(label_bound=30))
        parallel = search_labeling(g, SearchConfig(label_bound=30, jobs=2))
        assert sequential.certificate == parallel.certificate
        forced = search_labeling(g, SearchConfig(label_bound=30, jobs=2, deterministic=True))
        assert forced.certificate == sequential.certificate

    def test_empty_graph_rejected(self) -> None:
        """Test the non-empty precondition."""
        with pytest.raises(PreconditionError):
            search_labeling(Graph(0), SearchConfig())


class TestParallelMerge:
    """Test how per-prefix worker results are combined."""

    def test_earlier_budget_out_blocks_later_find(self) -> None:
        """Test that a find after an unfinished smaller prefix is not reported."""
        results = [([], 5, True), ([{0: 0, 1: 2}], 3, False)]
        assert _merge_worker_results(results, collect_all=False) == ([], True)

    def test_earliest_find_wins(self) -> None:
        """Test that the smallest finished prefix supplies the certificate."""
        results = [([], 4, False), ([{0: 0, 1: 3}], 2, False), ([{0: 0, 1: 5}], 2, True)]
        assert _merge_worker_results(results, collect_all=False) == ([{0: 0, 1: 3}], False)

    def test_nothing_found(self) -> None:
        """Test exhausted and budget-out merges without certificates."""
        assert _merge_worker_results([([], 1, False), ([], 1, False)], False) == ([], False)
        assert _merge_worker_results([([], 1, False), ([], 9, True)], False) == ([], True)

    def test_collect_all_concatenates(self) -> None:
        """Test that collect_all keeps every certificate and any budget-out."""
        results = [([{0: 0, 1: 2}], 3, False), ([], 7, True), ([{0: 0, 1: 5}], 3, False)]
        found, out = _merge_worker_results(results, collect_all=True)
        assert found == [{0: 0, 1: 2}, {0: 0, 1: 5}]
        assert out

    def test_parallel_budget_is_shared(self) -> None:
        """Test that a budget too small for any worker ends as budget_out."""
        g, _ = complete_multipartite([2, 2, 2])
        outcome = search_labeling(g, SearchConfig(label_bound=50, node_budget=10, jobs=2))
        assert outcome.status is SearchStatus.BUDGET_OUT


def _gap_allowed(gap: int, mode: LabelingMode, k: int) -> bool:
    if gap < 2:
        return False
    if mode is LabelingMode.PRODUCT:
        return count_prime_factors(gap) <= k
    if mode is LabelingMode.POWER:
        return classify_prime_power(gap, k) is not None
    return strict_kth_power_base(gap, k) is not None


def _brute_force(g: Graph, mode: LabelingMode, k: int, bound: int) -> set[tuple[int, ...]]:
    """Every labeling with labels in [-bound, bound], by enumerating the whole box."""
    edges = g.sorted_edges()
    return {
        labels
        for labels in itertools.product(range(-bound, bound + 1), repeat=g.vertex_count)
        if len(set(labels)) == len(labels)
        and all(_gap_allowed(abs(labels[u] - labels[v]), mode, k) for u, v in edges)
    }


BRUTE_FORCE_CASES = [
    pytest.param(complete_graph(3), LabelingMode.POWER, 1, 2, id="K3-power1-B2"),
    pytest.param(complete_graph(3), LabelingMode.POWER, 1, 3, id="K3-power1-B3"),
    pytest.param(complete_graph(4), LabelingMode.POWER, 1, 3, id="K4-power1-B3"),
    pytest.param(complete_graph(4), LabelingMode.POWER, 1, 4, id="K4-power1-B4"),
    pytest.param(complete_graph(4), LabelingMode.PRODUCT, 2, 3, id="K4-product2-B3"),
    pytest.param(cycle_graph(4), LabelingMode.STRICT, 2, 6, id="C4-strict2-B6"),
    pytest.param(cycle_graph(4), LabelingMode.STRICT, 2, 7, id="C4-strict2-B7"),
    pytest.param(path_graph(3), LabelingMode.PRODUCT, 1, 2, id="P3-product1-B2"),
    pytest.param(complete_multipartite([1, 1, 2])[0], LabelingMode.PRODUCT, 1, 3, id="K112-B3"),
]


class TestAgainstBruteForce:
    """Test the search against enumeration of the whole label box."""

    @pytest.mark.parametrize(("g", "mode", "k", "bound"), BRUTE_FORCE_CASES)
    def test_existence_matches(self, g: Graph, mode: LabelingMode, k: int, bound: int) -> None:
        """Test that the translation quotient finds a labeling exactly when one fits the box."""
        outcome = search_labeling(g, SearchConfig(label_bound=bound, mode=mode, k=k))
        expected = SearchStatus.FOUND if _brute_force(g, mode, k, bound) else SearchStatus.EXHAUSTED
        assert outcome.status is expected

    @pytest.mark.parametrize(("g", "mode", "k", "bound"), BRUTE_FORCE_CASES)
    def test_all_labelings_match(self, g: Graph, mode: LabelingMode, k: int, bound: int) -> None:
        """Test that collect_all without symmetry lists the box labelings exactly."""
        cfg = SearchConfig(
            label_bound=bound,
            mode=mode,
            k=k,
            symmetry=False,
            collect_all=True,
            max_certificates=10**6,
        )
        outcome = search_labeling(g, cfg)
        found = {tuple(cert.as_sequence()) for cert in outcome.certificates}
        assert found == _brute_force(g, mode, k, bound)

    def test_known_thresholds(self) -> None:
        """Test the smallest bounds for K_3 prime distance and C_4 prime squares."""
        triangle = complete_graph(3)
        assert not _brute_force(triangle, LabelingMode.POWER, 1, 2)
        assert _brute_force(triangle, LabelingMode.POWER, 1, 3)
        square = cycle_graph(4)
        assert not _brute_force(square, LabelingMode.STRICT, 2, 6)
        outcome = search_labeling(square, SearchConfig(7, LabelingMode.STRICT, 2))
        assert outcome.certificate is not None
        assert verify(square, outcome.certificate, LabelingMode.STRICT, 2).ok

    @pytest.mark.slow
    @pytest.mark.parametrize(
        ("g", "mode", "k", "bound"),
        [
            (complete_graph(4), LabelingMode.PRODUCT, 1, 9),
            (cycle_graph(5), LabelingMode.STRICT, 1, 8),
            (complete_multipartite([1, 2, 2])[0], LabelingMode.POWER, 1, 6),
        ],
    )
    def test_larger_boxes(self, g: Graph, mode: LabelingMode, k: int, bound: int) -> None:
        """Test existence agreement on five-vertex graphs and wider boxes."""
        outcome = search_labeling(g, SearchConfig(label_bound=bound, mode=mode, k=k))
        expected = SearchStatus.FOUND if _brute_force(g, mode, k, bound) else SearchStatus.EXHAUSTED
        assert outcome.status is expected


class TestMonotonicity:
    """Test that more room never loses an answer."""

    @pytest.mark.parametrize(
        ("g", "mode", "k"),
        [
            (complete_graph(4), LabelingMode.POWER, 1),
            (cycle_graph(4), LabelingMode.STRICT, 2),
            (complete_multipartite([1, 2, 2])[0], LabelingMode.PRODUCT, 1),
        ],
    )
    def test_growing_bound(self, g: Graph, mode: LabelingMode, k: int) -> None:
        """Test that once a bound admits a labeling every larger bound does too."""
        statuses = [
            search_labeling(g, SearchConfig(label_bound=bound, mode=mode, k=k)).status
            for bound in range(2, 16)
        ]
        first = statuses.index(SearchStatus.FOUND)
        assert all(status is SearchStatus.FOUND for status in statuses[first:])
        assert all(status is SearchStatus.EXHAUSTED for status in statuses[:first])

    def test_growing_node_budget(self) -> None:
        """Test that the exact node count succeeds, one less runs out, and more changes nothing."""
        g, _ = complete_multipartite([1, 2, 2])
        base = search_labeling(g, SearchConfig(label_bound=30))
        assert base.found
        needed = base.nodes_explored
        short = search_labeling(g, SearchConfig(label_bound=30, node_budget=needed - 1))
        assert short.status is SearchStatus.BUDGET_OUT
        for budget in (needed, 2 * needed, 10 * needed):
            outcome = search_labeling(g, SearchConfig(label_bound=30, node_budget=budget))
            assert outcome.certificate == base.certificate

    def test_exhausted_stays_exhausted(self) -> None:
        """Test that an exhausted search stays exhausted under a larger budget."""
        cfg = SearchConfig(label_bound=6, mode=LabelingMode.STRICT, k=2)
        base = search_labeling(cycle_graph(4), cfg)
        assert base.status is SearchStatus.EXHAUSTED
        for budget in (base.nodes_explored, 4 * base.nodes_explored):
            outcome = search_labeling(cycle_graph(4), cfg.replace(node_budget=budget))
            assert outcome.status is SearchStatus.EXHAUSTED


@pytest.mark.slow
class TestBoundedNonexistence:
    """Test exhaustive negative results within fixed bounds."""

    @pytest.mark.parametrize("sizes", [[1, 2, 3], [2, 2, 2], [1, 1, 1, 2]])
    def test_multipartite_prime_distance(self, sizes: list[int]) -> None:
        """Test product-1 searches that exhaust at B = 50."""
        g, _ = complete_multipartite(sizes)
        outcome = search_labeling(g, SearchConfig(label_bound=50))
        assert outcome.status is SearchStatus.EXHAUSTED

    def test_triangle_strict_square(self) -> None:
        """Test strict-2 on C_3 with B = 10^4."""
        outcome = search_labeling(cycle_graph(3), SearchConfig(10**4, LabelingMode.STRICT, 2))
        assert outcome.status is SearchStatus.EXHAUSTED

    def test_triangle_strict_cube(self) -> None:
        """Test strict-3 on C_3 with B = 500."""
        outcome = search_labeling(cycle_graph(3), SearchConfig(500, LabelingMode.STRICT, 3))
        assert outcome.status is SearchStatus.EXHAUSTED
