"""
2-odd graphs: labelings whose edge gaps are odd or exactly 2.

A graph is 2-odd iff its edges can be coloured red and blue so that no vertex
has red-degree above 2 and every cycle has a positive even number of blue
edges. decide_2odd searches vertex parities (red = same parity); the naive
oracle checks the cycle condition literally.
"""

import logging
from dataclasses import dataclass, field
from itertools import product

import networkx as nx

from pdl.errors import BudgetExhaustedError, PreconditionError
from pdl.graphs import Edge, Graph

logger = logging.getLogger(__name__)

NAIVE_EDGE_LIMIT = 20


@dataclass
class RedBlueColoring:
    """A red/blue split of E(G) certifying that G is 2-odd."""

    red_edges: frozenset[Edge]
    blue_edges: frozenset[Edge]
    parity: dict[int, int] = field(default_factory=dict)
    """Vertex parity under which blue edges cross and red edges do not."""

    def red_degree(self, v: int) -> int:
        return sum(1 for e in self.red_edges if v in e)

    def check(self, g: Graph) -> list[str]:
        """Return the violated witness invariants (empty when valid)."""
        problems = []
        if self.red_edges & self.blue_edges or (self.red_edges | self.blue_edges) != g.edges:
            problems.append("red and blue edges do not partition E(G)")
        red = nx.Graph(list(self.red_edges))
        if any(d > 2 for _, d in red.degree):
            problems.append("a vertex has red-degree above 2")
        if red.number_of_edges() and not nx.is_forest(red):
            problems.append("the red subgraph has a cycle")
        for u, v in self.red_edges:
            if self.parity.get(u) != self.parity.get(v):
                problems.append(f"red edge ({u}, {v}) crosses parity classes")
        for u, v in self.blue_edges:
            if self.parity.get(u) == self.parity.get(v):
                problems.append(f"blue edge ({u}, {v}) stays inside a parity class")
        return problems

    def to_dict(self) -> dict[str, object]:
        return {
            "red": [list(e) for e in sorted(self.red_edges)],
            "blue": [list(e) for e in sorted(self.blue_edges)],
            "parity": {str(v): p for v, p in sorted(self.parity.items())},
        }


def _red_ok(red: list[Edge], vertex_count: int) -> bool:
    degree = [0] * vertex_count
    for u, v in red:
        degree[u] += 1
        degree[v] += 1
        if degree[u] > 2 or degree[v] > 2:
            return False
    return nx.is_forest(nx.Graph(red)) if red else True


def decide_2odd(g: Graph, budget: int = 2**20) -> RedBlueColoring | None:
    """
    Decide 2-oddness by enumerating vertex parities with vertex 0 fixed even.

    Args:
        g: Graph.
        budget: Maximum number of parity assignments to try.

    Returns:
        A witness colouring, or None after all 2^(n-1) assignments fail.

    Raises:
        BudgetExhaustedError: If the budget runs out first.
    """
    if g.vertex_count == 0:
        return RedBlueColoring(frozenset(), frozenset(), {})
    edges = g.sorted_edges()
    tried = 0
    for bits in product((0, 1), repeat=g.vertex_count - 1):
        tried += 1
        if tried > budget:
            raise BudgetExhaustedError(
                f"2-odd search stopped after {budget} parity assignments", budget
            )
        parity = (0, *bits)
        red = [(u, v) for u, v in edges if parity[u] == parity[v]]
        if _red_ok(red, g.vertex_count):
            witness = RedBlueColoring(
                frozenset(red),
                g.edges - frozenset(red),
                dict(enumerate(parity)),
            )
            problems = witness.check(g)
            if problems:
                raise AssertionError(f"decide_2odd produced a bad witness: {problems}")
            logger.debug("2-odd witness after %d assignments", tried)
            return witness
    return None


def _parity_from_blue(g: Graph, blue: frozenset[Edge]) -> dict[int, int]:
    parity: dict[int, int] = {}
    nxg = g.to_networkx()
    for root in sorted(g.vertices):
        if root in parity:
            continue
        parity[root] = 0
        for u, v in nx.bfs_edges(nxg, root):
            parity[v] = parity[u] ^ (1 if (min(u, v), max(u, v)) in blue else 0)
    return parity


def naive_2odd_oracle(g: Graph) -> RedBlueColoring | None:
    """
    Check the red/blue cycle condition literally over all 2^|E| colourings.

    Raises:
        PreconditionError: If g has more than 20 edges.
    """
    if g.edge_count > NAIVE_EDGE_LIMIT:
        raise PreconditionError(
            f"naive_2odd_oracle is limited to {NAIVE_EDGE_LIMIT} edges, got {g.edge_count}"
        )
    edges = g.sorted_edges()
    cycles = []
    for cycle in nx.simple_cycles(g.to_networkx()):
        cycles.append(
            [
                edges.index(tuple(sorted((cycle[i], cycle[(i + 1) % len(cycle)]))))
                for i in range(len(cycle))
            ]
        )
    for mask in range(2 ** len(edges)):
        blue_flags = [(mask >> i) & 1 for i in range(len(edges))]
        degree = [0] * g.vertex_count
        for i, (u, v) in enumerate(edges):
            if not blue_flags[i]:
                degree[u] += 1
                degree[v] += 1
        if max(degree, default=0) > 2:
            continue
        good = True
        for cycle in cycles:
            blue_count = sum(blue_flags[i] for i in cycle)
            if blue_count == 0 or blue_count % 2:
                good = False
                break
        if good:
            blue = frozenset(e for i, e in enumerate(edges) if blue_flags[i])
            return RedBlueColoring(g.edges - blue, blue, _parity_from_blue(g, blue))
    return None
