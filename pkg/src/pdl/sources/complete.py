"""
Complete graphs K_n.
"""

import re

from pdl.graphs import complete_graph
from pdl.sources.base import BaseGraphSource, ParsedGraph
from pdl.sources.registry import SourceRegistry


@SourceRegistry.register
class CompleteSource(BaseGraphSource):
    """Parse ``K6`` or ``K_6`` into K_6."""

    family_name = "complete"
    syntax = "K<n>"
    description = "Complete graph on n vertices"
    examples = ["K4", "K_8"]
    pattern = re.compile(r"K_?(\d+)")

    def parse(self, text: str) -> ParsedGraph:
        n = int(self.match(text).group(1))
        return ParsedGraph(
            graph=complete_graph(n),
            name=f"K_{n}",
            source_family=self.family_name,
            metadata={"n": n},
        )
