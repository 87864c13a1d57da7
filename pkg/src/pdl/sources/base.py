"""
Base graph source interface.
"""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

from pdl.errors import PreconditionError
from pdl.graphs import Graph, Partition
from pdl.outerplanar import OuterplanarEmbedding


@dataclass
class ParsedGraph:
    """A graph read from a generator expression or a JSON document."""

    graph: Graph
    """The graph itself."""

    name: str
    """Display name, e.g. 'K_6' or the file name."""

    source_family: str
    """Name of the source that produced it."""

    partition: Partition | None = None
    """Partite sets, when the source knows them."""

    embeddings: list[OuterplanarEmbedding] = field(default_factory=list)
    """Outerplanar block embeddings, when supplied."""

    warnings: list[str] = field(default_factory=list)
    """Non-fatal issues found while parsing."""

    metadata: dict[str, Any] = field(default_factory=dict)
    """Family parameters such as sizes or n."""

    def __post_init__(self) -> None:
        """Validate the result after initialization."""
        if self.partition is not None and not self.partition.covers(self.graph):
            raise PreconditionError(f"Partition of {self.name} does not cover its vertices")
        for emb in self.embeddings:
            if not emb.vertices <= set(self.graph.vertices):
                raise PreconditionError(f"Embedding of {self.name} uses unknown vertices")
            missing = emb.edges() - self.graph.edges
            if missing:
                raise PreconditionError(
                    f"Embedding of {self.name} uses edges not in the graph: {sorted(missing)}"
                )


class BaseGraphSource(ABC):
    """
    Abstract base class for graph sources.

    A source recognises one kind of graph description (a generator family such
    as ``C9`` or a JSON document) and turns it into a ParsedGraph.
    """

    family_name: str = "Unknown"
    syntax: str = ""
    description: str = ""
    examples: list[str] = []
    pattern: re.Pattern[str] | None = None

    @classmethod
    def can_handle(cls, text: str) -> bool:
        """
        Check if this source understands the given description.

        Args:
            text: Generator expression, JSON text or file path.

        Returns:
            True if this source can parse it.
        """
        return cls.pattern is not None and cls.pattern.fullmatch(text.strip()) is not None

    def match(self, text: str) -> re.Match[str]:
        assert self.pattern is not None
        found = self.pattern.fullmatch(text.strip())
        if found is None:
            raise PreconditionError(
                f"'{text}' is not a {self.family_name} expression (expected {self.syntax})"
            )
        return found

    @abstractmethod
    def parse(self, text: str) -> ParsedGraph:
        """
        Build the graph described by text.

        Raises:
            PreconditionError: If the description is malformed.
        """

    @classmethod
    def get_info(cls) -> dict[str, Any]:
        """
        Get source information.

        Returns:
            Dictionary with source metadata.
        """
        return {
            "family_name": cls.family_name,
            "syntax": cls.syntax,
            "description": cls.description,
            "examples": list(cls.examples),
        }
