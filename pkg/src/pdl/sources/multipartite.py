"""
Complete multipartite graphs K_{a,b,...}.
"""

import re

from pdl.graphs import complete_multipartite
from pdl.sources.base import BaseGraphSource, ParsedGraph
from pdl.sources.registry import SourceRegistry


@SourceRegistry.register
class MultipartiteSource(BaseGraphSource):
    """
    Parse ``K_1_2_2`` (or ``K_{1,2,2}``) into K_{1,2,2}.

    Parts are numbered consecutively, so K_1_2_2 has parts (0,), (1, 2), (3, 4).
    """

    family_name = "multipartite"
    syntax = "K_<a>_<b>[_<c>...]"
    description = "Complete multipartite graph with the given part sizes"
    examples = ["K_1_2_2", "K_{3,3}", "K_1_1_1_2"]
    pattern = re.compile(r"K(?:(?:_\d+){2,}|_?\{\d+(?:,\d+)+\})")

    def parse(self, text: str) -> ParsedGraph:
        self.match(text)
        sizes = [int(s) for s in re.findall(r"\d+", text)]
        graph, partition = complete_multipartite(sizes)
        return ParsedGraph(
            graph=graph,
            name="K_{" + ",".join(str(s) for s in sizes) + "}",
            source_family=self.family_name,
            partition=partition,
            metadata={"sizes": sizes},
        )
