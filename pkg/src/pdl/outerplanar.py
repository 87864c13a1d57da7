"""
Outerplanar embeddings, weak duals and leaf-cycle extraction.

Embeddings are supplied with the graph (outer cycle plus chords per block)
rather than recognised. Functions here accept either a pdl Graph or a
networkx graph with arbitrary integer node ids, since the outerplanar
labeler recurses on induced subgraphs.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field

import networkx as nx

from pdl.errors import NotOuterplanarError, PreconditionError
from pdl.graphs import Edge, Graph

logger = logging.getLogger(__name__)


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _rotate_to_min(face: list[int]) -> tuple[int, ...]:
    i = face.index(min(face))
    return tuple(face[i:] + face[:i])


def face_edges(face: Iterable[int]) -> set[Edge]:
    """Undirected edges along a face boundary."""
    verts = list(face)
    return {_edge(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))}


@dataclass(frozen=True)
class OuterplanarEmbedding:
    """
    A 2-connected outerplanar block: its Hamiltonian outer cycle and chords.

    Chords must join vertices that are not consecutive on the outer cycle and
    must not cross one another with respect to the cyclic order.
    """

    outer_cycle: tuple[int, ...]
    chords: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        cycle = tuple(int(v) for v in self.outer_cycle)
        if len(cycle) < 3:
            raise PreconditionError(f"Outer cycle needs >= 3 vertices, got {list(cycle)}")
        if len(set(cycle)) != len(cycle):
            raise PreconditionError(f"Outer cycle repeats a vertex: {list(cycle)}")
        pos = {v: i for i, v in enumerate(cycle)}
        n = len(cycle)
        chords = set()
        for a, b in self.chords:
            if a not in pos or b not in pos:
                raise PreconditionError(f"Chord ({a}, {b}) has an endpoint off the outer cycle")
            if a == b or (pos[a] - pos[b]) % n in (1, n - 1):
                raise PreconditionError(f"Chord ({a}, {b}) joins adjacent outer-cycle vertices")
            chords.add(_edge(int(a), int(b)))
        spans = sorted(tuple(sorted((pos[a], pos[b]))) for a, b in chords)
        for i, (p, q) in enumerate(spans):
            for r, s in spans[i + 1 :]:
                if p < r < q < s or r < p < s < q:
                    raise NotOuterplanarError(
                        f"Chords ({cycle[p]}, {cycle[q]}) and ({cycle[r]}, {cycle[s]}) cross"
                    )
        object.__setattr__(self, "outer_cycle", cycle)
        object.__setattr__(self, "chords", frozenset(chords))

    @classmethod
    def of_cycle(cls, cycle: Iterable[int]) -> "OuterplanarEmbedding":
        return cls(tuple(cycle), frozenset())

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.outer_cycle)

    def edges(self) -> set[Edge]:
        return face_edges(self.outer_cycle) | set(self.chords)

    def faces(self) -> list[tuple[int, ...]]:
        """Inner faces, each rotated to start at its smallest vertex, sorted."""
        faces = [list(self.outer_cycle)]
        for a, b in sorted(self.chords):
            for idx, face in enumerate(faces):
                if a in face and b in face:
                    i, j = sorted((face.index(a), face.index(b)))
                    faces[idx] = face[i : j + 1]
                    faces.append(face[j:] + face[: i + 1])
                    break
        return sorted(_rotate_to_min(f) for f in faces)

    def without_face(self, face: Iterable[int], chord: Edge) -> "OuterplanarEmbedding":
        """Drop a leaf face's vertices other than its chord endpoints."""
        remainder = set(face) - set(chord)
        cycle = tuple(v for v in self.outer_cycle if v not in remainder)
        return OuterplanarEmbedding(cycle, self.chords - {_edge(*chord)})


def weak_dual(emb: OuterplanarEmbedding) -> nx.Graph:
    """
    The weak dual of an embedded block.

    Nodes are face indices into ``emb.faces()`` with a ``face`` attribute; two
    faces are adjacent when they share a chord, recorded as the ``chord`` edge
    attribute.

    Raises:
        NotOuterplanarError: If the faces do not form a tree.
    """
    faces = emb.faces()
    dual = nx.Graph()
    for i, face in enumerate(faces):
        dual.add_node(i, face=face)
    boundaries = [face_edges(f) for f in faces]
    for chord in sorted(emb.chords):
        sharing = [i for i, es in enumerate(boundaries) if chord in es]
        if len(sharing) != 2:
            raise NotOuterplanarError(f"Chord {chord} borders {len(sharing)} faces, expected 2")
        dual.add_edge(*sharing, chord=chord)
    if dual.number_of_nodes() != len(emb.chords) + 1 or not nx.is_tree(dual):
        raise NotOuterplanarError("Weak dual of the embedding is not a tree")
    return dual


@dataclass
class LeafCycleResult:
    """A chordless cycle hanging off the rest of the graph by one or two vertices."""

    cycle: tuple[int, ...]
    """Cycle in cyclic order, starting with the attachment vertices."""

    attachment: tuple[int, ...]
    """Either (x,) or two adjacent cycle vertices (x, y)."""

    embedding: OuterplanarEmbedding | None = None
    """Embedding of the block the cycle came from, when it has chords."""

    @property
    def remainder(self) -> tuple[int, ...]:
        return self.cycle[len(self.attachment) :]

    def reduced_embedding(self) -> OuterplanarEmbedding | None:
        """Block embedding after deleting the remainder, or None when the block vanishes."""
        if self.embedding is None or len(self.attachment) != 2:
            return None
        chord = _edge(*self.attachment)
        if chord not in self.embedding.chords:
            return None
        return self.embedding.without_face(self.cycle, chord)


def _as_nx(g: Graph | nx.Graph) -> nx.Graph:
    return g.to_networkx() if isinstance(g, Graph) else g


def _oriented(face: Iterable[int], first: int, second: int | None) -> tuple[int, ...]:
    """Rotate a cycle to start at `first`, heading towards `second` (or its smaller neighbour)."""
    verts = list(face)
    i = verts.index(first)
    forward = verts[i:] + verts[:i]
    backward = [forward[0]] + forward[:0:-1]
    if second is None:
        return tuple(forward if forward[1] <= backward[1] else backward)
    return tuple(forward if forward[1] == second else backward)


def detaches(g: nx.Graph, cycle: Iterable[int], attachment: Iterable[int]) -> bool:
    """True iff deleting `attachment` leaves the cycle remainder as its own component."""
    attach = set(attachment)
    remainder = set(cycle) - attach
    if not remainder:
        return False
    rest = g.subgraph(set(g.nodes) - attach)
    component = nx.node_connected_component(rest, next(iter(remainder)))
    return component == remainder and nx.number_connected_components(rest) >= 2


def embedding_for_block(
    block: frozenset[int], block_edges: set[Edge], embeddings: Iterable[OuterplanarEmbedding]
) -> OuterplanarEmbedding:
    """Find the supplied embedding of a block, deriving it for plain cycles."""
    for emb in embeddings:
        if emb.vertices == block:
            if emb.edges() != block_edges:
                raise NotOuterplanarError(
                    f"Embedding of block {sorted(block)} does not match the block's edges"
                )
            return emb
    if len(block_edges) == len(block) and len(block) >= 3:
        sub = nx.Graph(list(block_edges))
        cycle = [u for u, _ in nx.find_cycle(sub, source=min(block))]
        return OuterplanarEmbedding.of_cycle(cycle)
    raise PreconditionError(f"No outerplanar embedding supplied for block {sorted(block)}")


def find_leaf_cycle(
    g: Graph | nx.Graph, embeddings: Iterable[OuterplanarEmbedding] = ()
) -> LeafCycleResult:
    """
    Find a cycle C attached to the rest of g by one vertex or one chord.

    A leaf block of the block-cutpoint tree is taken (smallest vertex first).
    A cycle block is returned whole with its cut vertex as attachment; otherwise
    a face at a leaf of the weak dual whose remainder avoids the cut vertex is
    used, attached by its chord endpoints. Every answer is checked by deleting
    the attachment; if no leaf face passes, all faces are scanned.

    Args:
        g: Connected outerplanar graph with >= 2 cycles and minimum degree >= 2.
        embeddings: Embeddings of the blocks that have chords.

    Raises:
        PreconditionError: If the preconditions fail or no leaf cycle is found.
    """
    nxg = _as_nx(g)
    embeddings = list(embeddings)
    if nxg.number_of_nodes() == 0 or not nx.is_connected(nxg):
        raise PreconditionError("find_leaf_cycle needs a connected graph")
    if min(d for _, d in nxg.degree) < 2:
        raise PreconditionError("find_leaf_cycle needs minimum degree >= 2")
    if nxg.number_of_edges() - nxg.number_of_nodes() + 1 < 2:
        raise PreconditionError("find_leaf_cycle needs at least two cycles")

    cuts = set(nx.articulation_points(nxg))
    blocks = []
    for comp in nx.biconnected_component_edges(nxg):
        es = {_edge(u, v) for u, v in comp}
        blocks.append((frozenset(v for e in es for v in e), es))
    leaves = [(b, es) for b, es in blocks if len(b & cuts) <= 1]
    leaves.sort(key=lambda item: min(item[0]))

    for block, es in leaves:
        cut = next(iter(block & cuts), None)
        if len(es) == len(block) and cut is not None:
            emb = embedding_for_block(block, es, embeddings)
            result = LeafCycleResult(_oriented(emb.outer_cycle, cut, None), (cut,))
            if detaches(nxg, result.cycle, result.attachment):
                return result
            continue
        emb = embedding_for_block(block, es, embeddings)
        dual = weak_dual(emb)
        candidates = []
        for node in dual.nodes:
            if dual.degree(node) != 1:
                continue
            face = dual.nodes[node]["face"]
            chord = next(iter(dual.edges(node, data="chord")))[2]
            if cut is None or cut in chord or cut not in face:
                candidates.append((face, chord))
        for face, (x, y) in sorted(candidates):
            result = LeafCycleResult(_oriented(face, x, y), (x, y), emb)
            if detaches(nxg, result.cycle, result.attachment):
                logger.debug("Leaf face %s attached at %s", result.cycle, result.attachment)
                return result
        for face in emb.faces():
            for attachment in _attachments(face):
                second = attachment[1] if len(attachment) == 2 else None
                cycle = _oriented(face, attachment[0], second)
                if detaches(nxg, cycle, attachment):
                    return LeafCycleResult(cycle, attachment, emb)
    raise PreconditionError("No leaf cycle satisfies the detachment condition")


def _attachments(face: tuple[int, ...]) -> list[tuple[int, ...]]:
    singles = [(v,) for v in sorted(face)]
    pairs = sorted(
        _edge(face[i], face[(i + 1) % len(face)]) for i in range(len(face))
    )
    return singles + pairs
