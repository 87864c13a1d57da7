"""
Graph JSON documents.

Schema ``pdl.graph/1``::

    {
      "schema": "pdl.graph/1",          optional
      "name": "two triangles",          optional
      "n": 5,
      "edges": [[0, 1], [1, 2], ...],
      "partition": [[0], [1, 2], ...],  optional
      "blocks": [{"outer": [0, 1, 2], "chords": [[a, b], ...]}, ...]  optional
    }

Schema violations are reported as ``<origin>:<line>: <json path>: <problem>``.
"""

import json
import re
from pathlib import Path
from typing import Any

from pdl.errors import PreconditionError
from pdl.graphs import Graph, Partition
from pdl.outerplanar import OuterplanarEmbedding
from pdl.sources.base import BaseGraphSource, ParsedGraph
from pdl.sources.registry import SourceRegistry

GRAPH_SCHEMA = "pdl.graph/1"
KNOWN_KEYS = {"schema", "name", "n", "edges", "partition", "blocks"}

_WHITESPACE = re.compile(r"\s*")


class GraphSchemaError(PreconditionError):
    """A graph document is malformed; carries where the problem is."""

    def __init__(self, origin: str, line: int, path: str, problem: str) -> None:
        self.origin = origin
        self.line = line
        self.path = path
        self.problem = problem
        super().__init__(f"{origin}:{line}: {path}: {problem}")


def value_offsets(text: str) -> dict[str, int]:
    """
    Map every JSON path in a well-formed document to the offset of its value.

    Paths look like ``$``, ``$.edges``, ``$.edges[3]``, ``$.blocks[0].outer[2]``.
    """
    decoder = json.JSONDecoder()
    offsets: dict[str, int] = {}

    def skip(i: int) -> int:
        match = _WHITESPACE.match(text, i)
        return match.end() if match else i

    def walk(i: int, path: str) -> int:
        i = skip(i)
        offsets[path] = i
        if text[i] == "{":
            i = skip(i + 1)
            if text[i] == "}":
                return i + 1
            while True:
                key, i = decoder.raw_decode(text, i)
                i = skip(i) + 1  # ':'
                i = skip(walk(i, f"{path}.{key}"))
                if text[i] == "}":
                    return i + 1
                i = skip(i + 1)
        if text[i] == "[":
            i = skip(i + 1)
            if text[i] == "]":
                return i + 1
            index = 0
            while True:
                i = skip(walk(i, f"{path}[{index}]"))
                index += 1
                if text[i] == "]":
                    return i + 1
                i = skip(i + 1)
        _, end = decoder.raw_decode(text, i)
        return int(end)

    walk(0, "$")
    return offsets


class _Checker:
    """Collects location information for schema errors."""

    def __init__(self, origin: str, text: str) -> None:
        self.origin = origin
        self.text = text
        self.offsets = value_offsets(text)

    def line_of(self, path: str) -> int:
        # Fall back to the nearest located ancestor
        while path not in self.offsets and path != "$":
            path = re.sub(r"(\.[^.\[]+|\[\d+\])$", "", path) or "$"
        offset = self.offsets.get(path, 0)
        return self.text.count("\n", 0, offset) + 1

    def fail(self, path: str, problem: str) -> GraphSchemaError:
        return GraphSchemaError(self.origin, self.line_of(path), path, problem)

    def integer(self, value: Any, path: str, minimum: int | None = None) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise self.fail(path, f"expected an integer, got {json.dumps(value)}")
        if minimum is not None and value < minimum:
            raise self.fail(path, f"must be >= {minimum}, got {value}")
        return value

    def vertex(self, value: Any, path: str, n: int) -> int:
        v = self.integer(value, path, 0)
        if v >= n:
            raise self.fail(path, f"vertex {v} is outside 0..{n - 1}")
        return v

    def array(self, value: Any, path: str) -> list[Any]:
        if not isinstance(value, list):
            raise self.fail(path, f"expected an array, got {type(value).__name__}")
        return value

    def pair(self, value: Any, path: str, n: int) -> tuple[int, int]:
        items = self.array(value, path)
        if len(items) != 2:
            raise self.fail(path, f"expected [u, v], got {json.dumps(items)}")
        u = self.vertex(items[0], f"{path}[0]", n)
        v = self.vertex(items[1], f"{path}[1]", n)
        if u == v:
            raise self.fail(path, f"loop at vertex {u}")
        return u, v


def parse_graph_document(text: str, origin: str = "<json>") -> ParsedGraph:
    """
    Parse a graph JSON document.

    Args:
        text: JSON text.
        origin: File name (or placeholder) used in error messages.

    Raises:
        GraphSchemaError: On malformed JSON or a schema violation.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphSchemaError(origin, e.lineno, "$", f"invalid JSON: {e.msg}") from e
    check = _Checker(origin, text)
    if not isinstance(doc, dict):
        raise check.fail("$", "expected a JSON object")

    warnings = [f"ignoring unknown field '{key}'" for key in sorted(set(doc) - KNOWN_KEYS)]
    schema = doc.get("schema", GRAPH_SCHEMA)
    if schema != GRAPH_SCHEMA:
        raise check.fail("$.schema", f"unsupported schema '{schema}' (expected {GRAPH_SCHEMA})")
    if "n" not in doc:
        raise check.fail("$", "missing required field 'n'")
    if "edges" not in doc:
        raise check.fail("$", "missing required field 'edges'")
    n = check.integer(doc["n"], "$.n", 0)

    seen: dict[tuple[int, int], int] = {}
    for i, item in enumerate(check.array(doc["edges"], "$.edges")):
        u, v = check.pair(item, f"$.edges[{i}]", n)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise check.fail(f"$.edges[{i}]", f"duplicate of $.edges[{seen[key]}]")
        seen[key] = i
    graph = Graph(n, frozenset(seen))

    partition = None
    if "partition" in doc:
        parts = []
        for i, part in enumerate(check.array(doc["partition"], "$.partition")):
            path = f"$.partition[{i}]"
            parts.append(
                tuple(
                    check.vertex(v, f"{path}[{j}]", n)
                    for j, v in enumerate(check.array(part, path))
                )
            )
        try:
            partition = Partition(tuple(parts))
        except PreconditionError as e:
            raise check.fail("$.partition", str(e)) from e
        if not partition.covers(graph):
            raise check.fail("$.partition", "parts do not cover every vertex")

    embeddings = []
    for i, block in enumerate(check.array(doc.get("blocks", []), "$.blocks")):
        path = f"$.blocks[{i}]"
        if not isinstance(block, dict) or "outer" not in block:
            raise check.fail(path, "expected an object with an 'outer' cycle")
        outer = tuple(
            check.vertex(v, f"{path}.outer[{j}]", n)
            for j, v in enumerate(check.array(block["outer"], f"{path}.outer"))
        )
        chords = frozenset(
            check.pair(c, f"{path}.chords[{j}]", n)
            for j, c in enumerate(check.array(block.get("chords", []), f"{path}.chords"))
        )
        try:
            emb = OuterplanarEmbedding(outer, chords)
        except PreconditionError as e:
            raise check.fail(path, str(e)) from e
        missing = emb.edges() - graph.edges
        if missing:
            raise check.fail(path, f"block uses edges not in the graph: {sorted(missing)}")
        embeddings.append(emb)

    name = doc.get("name", origin)
    return ParsedGraph(
        graph=graph,
        name=str(name),
        source_family=JsonGraphSource.family_name,
        partition=partition,
        embeddings=embeddings,
        warnings=warnings,
        metadata={"origin": origin},
    )


@SourceRegistry.register
class JsonGraphSource(BaseGraphSource):
    """Graph documents, given inline (text starting with '{') or as a .json file path."""

    family_name = "json"
    syntax = "<file>.json | {...}"
    description = "Graph JSON document (n, edges, optional partition and blocks)"
    examples = ["graph.json"]

    @classmethod
    def can_handle(cls, text: str) -> bool:
        stripped = text.strip()
        return stripped.startswith("{") or stripped.lower().endswith(".json")

    def parse(self, text: str) -> ParsedGraph:
        stripped = text.strip()
        if stripped.startswith("{"):
            return parse_graph_document(stripped)
        path = Path(stripped)
        if not path.is_file():
            raise PreconditionError(f"Graph file not found: {path}")
        return parse_graph_document(path.read_text(encoding="utf-8"), origin=str(path))


def graph_to_document(parsed: ParsedGraph) -> dict[str, Any]:
    """Write a parsed graph as a pdl.graph/1 document that parse_graph_document reads back."""
    doc: dict[str, Any] = {
        "schema": GRAPH_SCHEMA,
        "name": parsed.name,
        "n": parsed.graph.vertex_count,
        "edges": [list(e) for e in parsed.graph.sorted_edges()],
    }
    if parsed.partition is not None:
        doc["partition"] = [list(p) for p in parsed.partition.parts]
    if parsed.embeddings:
        doc["blocks"] = [
            {"outer": list(e.outer_cycle), "chords": [list(c) for c in sorted(e.chords)]}
            for e in parsed.embeddings
        ]
    return doc
