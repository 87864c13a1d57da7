"""
Paths P_n.
"""

import re

from pdl.graphs import path_graph
from pdl.sources.base import BaseGraphSource, ParsedGraph
from pdl.sources.registry import SourceRegistry


@SourceRegistry.register
class PathSource(BaseGraphSource):
    family_name = "path"
    syntax = "P<n>"
    description = "Path on n vertices"
    examples = ["P5"]
    pattern = re.compile(r"P_?(\d+)")

    def parse(self, text: str) -> ParsedGraph:
        n = int(self.match(text).group(1))
        return ParsedGraph(
            graph=path_graph(n),
            name=f"P_{n}",
            source_family=self.family_name,
            metadata={"n": n},
        )
