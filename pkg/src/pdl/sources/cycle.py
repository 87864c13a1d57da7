"""
Cycles C_n.
"""

import re

from pdl.graphs import cycle_graph
from pdl.outerplanar import OuterplanarEmbedding
from pdl.sources.base import BaseGraphSource, ParsedGraph
from pdl.sources.registry import SourceRegistry


@SourceRegistry.register
class CycleSource(BaseGraphSource):
    """Parse ``C9`` into C_9 together with its (chordless) outerplanar embedding."""

    family_name = "cycle"
    syntax = "C<n>"
    description = "Cycle on n >= 3 vertices"
    examples = ["C7", "C_11"]
    pattern = re.compile(r"C_?(\d+)")

    def parse(self, text: str) -> ParsedGraph:
        n = int(self.match(text).group(1))
        graph = cycle_graph(n)
        return ParsedGraph(
            graph=graph,
            name=f"C_{n}",
            source_family=self.family_name,
            embeddings=[OuterplanarEmbedding.of_cycle(range(n))],
            metadata={"n": n},
        )
