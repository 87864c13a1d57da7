"""
Graph representation, generators and structural algorithms.

Graphs are small, immutable and use the vertex set 0..n-1. Heavy lifting
(components, cliques, greedy colouring) is delegated to networkx.
"""

import logging
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from pdl.errors import ChromaticBudgetError, PreconditionError

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on the vertices 0..vertex_count-1."""

    vertex_count: int
    """Number of vertices."""

    edges: frozenset[Edge] = field(default_factory=frozenset)
    """Unordered vertex pairs, stored as (smaller, larger)."""

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise PreconditionError(f"vertex_count must be >= 0, got {self.vertex_count}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise PreconditionError(f"Loop at vertex {u} is not allowed")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise PreconditionError(
                    f"Edge ({u}, {v}) has an endpoint outside 0..{self.vertex_count - 1}"
                )
            normalized.add(_edge(int(u), int(v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Iterable[int]]) -> "Graph":
        """Build a graph, rejecting duplicate edges."""
        pairs = [tuple(e) for e in edges]
        for pair in pairs:
            if len(pair) != 2:
                raise PreconditionError(f"Edge {list(pair)} must have exactly two endpoints")
        seen: set[Edge] = set()
        for u, v in pairs:
            key = _edge(u, v)
            if key in seen:
                raise PreconditionError(f"Duplicate edge ({u}, {v})")
            seen.add(key)
        return cls(vertex_count, frozenset(pairs))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Convert a networkx graph, relabeling nodes 0..n-1 in sorted order."""
        order = {node: i for i, node in enumerate(sorted(graph.nodes))}
        return cls(len(order), frozenset((order[u], order[v]) for u, v in graph.edges))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        return self.vertex_count > 0 and nx.is_connected(self.to_networkx())


@dataclass(frozen=True)
class Partition:
    """Disjoint vertex lists covering V(G), e.g. the parts of a multipartite graph."""

    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        parts = tuple(tuple(int(v) for v in part) for part in self.parts)
        seen: set[int] = set()
        for part in parts:
            if not part:
                raise PreconditionError("Partition parts must be non-empty")
            overlap = seen.intersection(part)
            if overlap or len(set(part)) != len(part):
                raise PreconditionError(f"Partition parts overlap at {sorted(overlap) or part}")
            seen.update(part)
        object.__setattr__(self, "parts", parts)

    @property
    def k(self) -> int:
        """Number of parts."""
        return len(self.parts)

    @property
    def max_part_size(self) -> int:
        return max((len(p) for p in self.parts), default=0)

    def part_index(self) -> dict[int, int]:
        return {v: i for i, part in enumerate(self.parts) for v in part}

    def covers(self, g: Graph) -> bool:
        return sorted(self.part_index()) == list(g.vertices)

    def is_proper_coloring(self, g: Graph) -> bool:
        """True iff the parts cover V(g) and no edge lies inside a part."""
        if not self.covers(g):
            return False
        index = self.part_index()
        return all(index[u] != index[v] for u, v in g.edges)


def complete_graph(n: int) -> Graph:
    """K_n."""
    if n < 1:
        raise PreconditionError(f"complete_graph needs n >= 1, got {n}")
    return Graph.from_networkx(nx.complete_graph(n))


def complete_multipartite(sizes: list[int]) -> tuple[Graph, Partition]:
    """K_{a,b,...} with consecutively numbered parts, plus its partition."""
    if not sizes or any(s < 1 for s in sizes):
        raise PreconditionError(f"Part sizes must be positive ints, got {sizes}")
    graph = Graph.from_networkx(nx.complete_multipartite_graph(*sizes))
    parts = []
    start = 0
    for size in sizes:
        parts.append(tuple(range(start, start + size)))
        start += size
    return graph, Partition(tuple(parts))


def cycle_graph(n: int) -> Graph:
    """C_n with edges i -- i+1 (mod n)."""
    if n < 3:
        raise PreconditionError(f"cycle_graph needs n >= 3, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def path_graph(n: int) -> Graph:
    """P_n: n vertices, n - 1 edges."""
    if n < 1:
        raise PreconditionError(f"path_graph needs n >= 1, got {n}")
    return Graph.from_networkx(nx.path_graph(n))


def girth_of(adjacency: dict[int, Iterable[int]]) -> int | None:
    """Shortest cycle length of a graph given as an adjacency mapping."""
    best: int | None = None
    for root in adjacency:
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests."""
    return girth_of(g.adjacency)


@dataclass
class ColoringResult:
    """An optimal proper colouring and the effort spent proving it."""

    chromatic_number: int
    coloring: dict[int, int]
    clique_bound: int
    greedy_bound: int
    nodes_explored: int = 0

    def color_classes(self) -> Partition:
        """The colour classes as a Partition, ordered by colour."""
        classes: dict[int, list[int]] = {}
        for v, c in self.coloring.items():
            classes.setdefault(c, []).append(v)
        return Partition(tuple(tuple(sorted(p)) for _, p in sorted(classes.items())))


class _KColoringSearch:
    """Backtracking k-colouring with DSATUR vertex choice and colour symmetry breaking."""

    def __init__(self, g: Graph, budget: int) -> None:
        self.g = g
        self.budget = budget
        self.nodes = 0

    def run(self, k: int) -> dict[int, int] | None:
        colors: dict[int, int] = {}
        if self._extend(k, colors, 0):
            return dict(colors)
        return None

    def _pick(self, colors: dict[int, int]) -> int:
        def key(v: int) -> tuple[int, int, int]:
            saturation = len({colors[w] for w in self.g.neighbors(v) if w in colors})
            return (saturation, self.g.degree(v), -v)

        return max((v for v in self.g.vertices if v not in colors), key=key)

    def _extend(self, k: int, colors: dict[int, int], used: int) -> bool:
        if len(colors) == self.g.vertex_count:
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfNodes
        v = self._pick(colors)
        blocked = {colors[w] for w in self.g.neighbors(v) if w in colors}
        for c in range(min(used + 1, k)):
            if c in blocked:
                continue
            colors[v] = c
            if self._extend(k, colors, max(used, c + 1)):
                return True
            del colors[v]
        return False


class _OutOfNodes(Exception):
    pass


def optimal_coloring(g: Graph, budget: int = 10**6) -> ColoringResult:
    """
    Exact chromatic number with a witness colouring.

    The clique number gives the lower bound and networkx's DSATUR greedy
    colouring the upper bound; backtracking closes the gap one k at a time.

    Args:
        g: Graph to colour (intended for up to ~20 vertices).
        budget: Maximum number of search nodes over all k.

    Raises:
        ChromaticBudgetError: With the best known bounds if the budget runs out.
    """
    if g.vertex_count == 0:
        return ColoringResult(0, {}, 0, 0)
    nxg = g.to_networkx()
    clique = max(len(c) for c in nx.find_cliques(nxg))
    greedy = nx.coloring.greedy_color(nxg, strategy="DSATUR")
    upper = max(greedy.values()) + 1
    best = dict(greedy)
    search = _KColoringSearch(g, budget)
    lower = clique
    try:
        for k in range(clique, upper):
            found = search.run(k)
            if found is not None:
                best, upper = found, k
                break
            lower = k + 1
    except _OutOfNodes:
        raise ChromaticBudgetError(budget, lower, upper) from None
    logger.debug(
        "chi=%d (clique %d, greedy %d, %d nodes)", upper, clique, len(set(greedy.values())),
        search.nodes,
    )
    return ColoringResult(upper, best, clique, max(greedy.values()) + 1, search.nodes)


def chromatic_number(g: Graph, budget: int = 10**6) -> int:
    """Exact chi(G); see optimal_coloring."""
    return optimal_coloring(g, budget).chromatic_number


@dataclass
class BlockCutpointTree:
    """Blocks and cut vertices of a connected graph, arranged as a tree."""

    blocks: list[frozenset[int]]
    """Vertex sets of the blocks (2-connected pieces, bridges, or a lone vertex)."""

    block_edges: list[frozenset[Edge]]
    """Edges of each block, parallel to `blocks`."""

    cut_vertices: frozenset[int]
    tree: nx.Graph
    """Nodes ("B", i) for block i and ("C", v) for cut vertex v."""

    def block_cut_vertices(self, index: int) -> list[int]:
        return sorted(v for kind, v in self.tree.neighbors(("B", index)) if kind == "C")

    def leaf_blocks(self) -> list[int]:
        """Indices of blocks with at most one cut vertex."""
        return [i for i in range(len(self.blocks)) if self.tree.degree(("B", i)) <= 1]


def block_cutpoint_tree(g: Graph) -> BlockCutpointTree:
    """
    Build the block-cutpoint tree of a connected graph.

    Raises:
        PreconditionError: If g is empty or disconnected.
    """
    if not g.is_connected():
        raise PreconditionError("block_cutpoint_tree needs a connected, non-empty graph")
    nxg = g.to_networkx()
    if g.vertex_count == 1:
        blocks = [frozenset({0})]
        edges: list[frozenset[Edge]] = [frozenset()]
    else:
        pieces = [
            frozenset(_edge(u, v) for u, v in comp)
            for comp in nx.biconnected_component_edges(nxg)
        ]
        pieces.sort(key=lambda es: min(es))
        edges = pieces
        blocks = [frozenset(v for e in es for v in e) for es in pieces]
    cuts = frozenset(nx.articulation_points(nxg))
    tree = nx.Graph()
    for i, block in enumerate(blocks):
        tree.add_node(("B", i))
        for v in sorted(block & cuts):
            tree.add_edge(("B", i), ("C", v))
    return BlockCutpointTree(blocks, edges, cuts, tree)
