"""
Graph sources for pdl.

Turns generator expressions (K6, C9, P5, K_1_2_2) and graph JSON documents
into graphs, with partitions and outerplanar embeddings when known.
"""

from pdl.sources.base import BaseGraphSource, ParsedGraph
from pdl.sources.jsonfile import (
    GRAPH_SCHEMA,
    GraphSchemaError,
    graph_to_document,
    parse_graph_document,
)
from pdl.sources.registry import (
    SourceRegistry,
    get_source,
    get_supported_sources,
    parse_graph_source,
    register_source,
)

__all__ = [
    "BaseGraphSource",
    "ParsedGraph",
    "SourceRegistry",
    "get_source",
    "get_supported_sources",
    "parse_graph_source",
    "register_source",
    "GRAPH_SCHEMA",
    "GraphSchemaError",
    "graph_to_document",
    "parse_graph_document",
]
