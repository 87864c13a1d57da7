"""Tests for graph sources."""

import json
import re
from pathlib import Path

import pytest

from pdl.errors import PreconditionError
from pdl.graphs import Graph
from pdl.sources import (
    BaseGraphSource,
    GraphSchemaError,
    ParsedGraph,
    SourceRegistry,
    get_source,
    get_supported_sources,
    graph_to_document,
    parse_graph_document,
    parse_graph_source,
    register_source,
)

DATA = Path(__file__).parent / "data"


class TestSourceRegistry:
    """Test source lookup."""

    @pytest.mark.parametrize(
        ("text", "family"),
        [
            ("K6", "complete"),
            ("K_8", "complete"),
            ("C9", "cycle"),
            ("P5", "path"),
            ("K_1_2_2", "multipartite"),
            ("K_{3,3}", "multipartite"),
            ('{"n": 2, "edges": [[0, 1]]}', "json"),
            ("graph.json", "json"),
        ],
    )
    def test_get_source_by_text(self, text: str, family: str) -> None:
        """Test that each expression reaches its source."""
        assert get_source(text).family_name == family

    def test_get_source_by_family(self) -> None:
        """Test lookup by family name."""
        assert get_source(family_name="Cycle").family_name == "cycle"
        with pytest.raises(PreconditionError, match="Unknown family"):
            get_source(family_name="hypercube")

    def test_unknown_expression(self) -> None:
        """Test that unparseable text lists the supported syntaxes."""
        with pytest.raises(PreconditionError, match="Unknown graph expression: 'Q3'"):
            get_source("Q3")
        with pytest.raises(PreconditionError, match="Either text or family_name"):
            get_source()

    def test_supported_sources(self) -> None:
        """Test the families listing."""
        names = [s["family_name"] for s in get_supported_sources()]
        assert names == ["complete", "cycle", "json", "multipartite", "path"]
        assert all(s["examples"] for s in get_supported_sources())

    def test_register_custom_source(self) -> None:
        """Test registering a new family."""

        class StarSource(BaseGraphSource):
            family_name = "test-star"
            pattern = re.compile(r"S(\d+)")

            def parse(self, text: str) -> ParsedGraph:
                n = int(self.match(text).group(1))
                graph = Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])
                return ParsedGraph(graph, f"S_{n}", self.family_name)

        SourceRegistry.register(StarSource)
        try:
            assert parse_graph_source("S4").graph.edge_count == 4
        finally:
            SourceRegistry._sources.pop("test-star")

    def test_register_source_decorator(self) -> None:
        """Test the module-level decorator returns the class and registers it."""
        try:

            @register_source
            class FanSource(BaseGraphSource):
                family_name = "test-fan"
                pattern = re.compile(r"F(\d+)")

                def parse(self, text: str) -> ParsedGraph:
                    n = int(self.match(text).group(1))
                    spokes = [(0, i) for i in range(1, n + 1)]
                    rim = [(i, i + 1) for i in range(1, n)]
                    return ParsedGraph(Graph.from_edges(n + 1, spokes + rim), f"F_{n}", "test-fan")

            assert FanSource.family_name == "test-fan"
            assert get_source(family_name="test-fan").__class__ is FanSource
            assert parse_graph_source("F4").graph.edge_count == 7
        finally:
            SourceRegistry._sources.pop("test-fan", None)


class TestFamilies:
    """Test generator families."""

    def test_complete(self) -> None:
        """Test K_n."""
        parsed = parse_graph_source("K5")
        assert parsed.name == "K_5"
        assert parsed.graph.edge_count == 10
        assert parsed.metadata == {"n": 5}

    def test_cycle_carries_embedding(self) -> None:
        """Test that C_n comes with its outer cycle."""
        parsed = parse_graph_source("C_9")
        assert parsed.graph.edge_count == 9
        assert parsed.embeddings[0].outer_cycle == tuple(range(9))

    def test_multipartite_partition(self) -> None:
        """Test that both spellings give the same parts."""
        a = parse_graph_source("K_1_2_2")
        b = parse_graph_source("K_{1,2,2}")
        assert a.name == b.name == "K_{1,2,2}"
        assert a.partition is not None
        assert a.partition.parts == ((0,), (1, 2), (3, 4))
        assert a.graph == b.graph

    def test_match_rejects_other_family(self) -> None:
        """Test that a source refuses a foreign expression."""
        with pytest.raises(PreconditionError, match="not a path expression"):
            get_source(family_name="path").parse("C5")


class TestGraphDocument:
    """Test graph JSON parsing and error locations."""

    def test_blocks_file(self) -> None:
        """Test a document with embeddings."""
        parsed = parse_graph_source(str(DATA / "outerplanar_blocks.json"))
        assert parsed.source_family == "json"
        assert parsed.graph.vertex_count == 25
        assert len(parsed.embeddings) == 2
        assert parsed.embeddings[0].chords == frozenset({(0, 8)})
        assert parsed.name.startswith("chorded 16-cycle")

    def test_error_names_path_and_line(self) -> None:
        """Test that a bad vertex is reported with its JSON path and line."""
        path = DATA / "bad_edge.json"
        with pytest.raises(GraphSchemaError) as excinfo:
            parse_graph_source(str(path))
        error = excinfo.value
        assert (error.line, error.path) == (6, "$.edges[2][1]")
        assert str(error) == f"{path}:6: $.edges[2][1]: vertex 7 is outside 0..3"

    def test_invalid_json(self) -> None:
        """Test a syntax error location."""
        with pytest.raises(GraphSchemaError, match=r"<json>:2: \$: invalid JSON"):
            parse_graph_document('{"n": 2,\n "edges": [[0, 1]')

    def test_duplicate_edge(self) -> None:
        """Test that a repeated edge names its first occurrence."""
        text = '{"n": 3,\n "edges": [[0, 1],\n [1, 2],\n [1, 0]]}'
        with pytest.raises(GraphSchemaError) as excinfo:
            parse_graph_document(text)
        assert str(excinfo.value) == "<json>:4: $.edges[2]: duplicate of $.edges[0]"

    def test_missing_fields_and_schema(self) -> None:
        """Test required fields and the schema tag."""
        with pytest.raises(GraphSchemaError, match="missing required field 'edges'"):
            parse_graph_document('{"n": 3}')
        with pytest.raises(GraphSchemaError, match="unsupported schema"):
            parse_graph_document('{"schema": "pdl.graph/9", "n": 1, "edges": []}')
        with pytest.raises(GraphSchemaError, match="loop at vertex 1"):
            parse_graph_document('{"n": 3, "edges": [[1, 1]]}')

    def test_unknown_keys_warn(self) -> None:
        """Test that extra fields are kept as warnings."""
        parsed = parse_graph_document('{"n": 2, "edges": [[0, 1]], "colour": "red"}')
        assert parsed.warnings == ["ignoring unknown field 'colour'"]

    def test_partition(self) -> None:
        """Test partition validation."""
        doc = {"n": 3, "edges": [[0, 1], [1, 2]], "partition": [[0, 2], [1]]}
        parsed = parse_graph_document(json.dumps(doc))
        assert parsed.partition is not None and parsed.partition.k == 2
        doc["partition"] = [[0, 2]]
        with pytest.raises(GraphSchemaError, match="do not cover"):
            parse_graph_document(json.dumps(doc))

    def test_block_must_use_graph_edges(self) -> None:
        """Test that embeddings are checked against the edges."""
        doc = {"n": 4, "edges": [[0, 1], [1, 2], [2, 0]], "blocks": [{"outer": [0, 1, 2, 3]}]}
        with pytest.raises(GraphSchemaError, match="edges not in the graph"):
            parse_graph_document(json.dumps(doc))

    def test_missing_file(self) -> None:
        """Test a path that does not exist."""
        with pytest.raises(PreconditionError, match="Graph file not found"):
            parse_graph_source("no-such-graph.json")

    def test_document_round_trip(self) -> None:
        """Test that graph_to_document is read back unchanged."""
        parsed = parse_graph_source(str(DATA / "outerplanar_blocks.json"))
        again = parse_graph_document(json.dumps(graph_to_document(parsed)))
        assert again.graph == parsed.graph
        assert again.embeddings == parsed.embeddings
