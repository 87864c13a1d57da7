"""
pdl - prime distance labelings of graphs.

Labelings assign distinct integers to vertices so that every edge gap is
restricted arithmetically:

- product-k: the gap has at most k prime factors (with multiplicity)
- power-k: the gap is a prime power p^j with j <= k
- strict-k: the gap is exactly p^k

The package verifies such labelings, constructs them for complete,
multipartite, cycle and outerplanar graphs, and searches for them within
explicit bounds.
"""

from pdl.constructors import (
    label_complete,
    label_complete_power,
    label_K11c,
    label_K122,
    label_multipartite_via_ap,
    label_outerplanar,
)
from pdl.cycles import (
    CycleLabelerTable,
    existence_cycle,
    extend_odd_cycle,
    label_cycle_strict,
    label_even_cycle,
)
from pdl.errors import (
    BudgetExhaustedError,
    ConstructionError,
    GirthError,
    LabelOverflowError,
    NotOuterplanarError,
    PdlError,
    PreconditionError,
)
from pdl.graphs import (
    Graph,
    Partition,
    block_cutpoint_tree,
    chromatic_number,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    girth,
    path_graph,
)
from pdl.instruments import ppc_scan, ppn_bounds, twopower_demo
from pdl.labeling import (
    Labeling,
    LabelingMode,
    VerificationReport,
    verify,
    verify_power,
    verify_product,
    verify_strict,
)
from pdl.ntheory import (
    classify_prime_power,
    count_prime_factors,
    find_prime_ap,
    is_prime,
    twin_primes,
)
from pdl.outerplanar import OuterplanarEmbedding, find_leaf_cycle
from pdl.search import SearchConfig, SearchOutcome, SearchStatus, search_labeling
from pdl.sources import ParsedGraph, parse_graph_source
from pdl.twoodd import RedBlueColoring, decide_2odd

__version__ = "0.1.0"
__all__ = [
    # Number theory
    "is_prime",
    "classify_prime_power",
    "count_prime_factors",
    "twin_primes",
    "find_prime_ap",
    # Graphs
    "Graph",
    "Partition",
    "OuterplanarEmbedding",
    "complete_graph",
    "complete_multipartite",
    "cycle_graph",
    "path_graph",
    "girth",
    "chromatic_number",
    "block_cutpoint_tree",
    "find_leaf_cycle",
    # Labelings
    "Labeling",
    "LabelingMode",
    "VerificationReport",
    "verify",
    "verify_product",
    "verify_power",
    "verify_strict",
    # Constructors
    "label_complete",
    "label_complete_power",
    "label_multipartite_via_ap",
    "label_K11c",
    "label_K122",
    "label_outerplanar",
    "label_even_cycle",
    "extend_odd_cycle",
    "existence_cycle",
    "label_cycle_strict",
    "CycleLabelerTable",
    # Search
    "SearchConfig",
    "SearchOutcome",
    "SearchStatus",
    "search_labeling",
    "ppn_bounds",
    "ppc_scan",
    "twopower_demo",
    "RedBlueColoring",
    "decide_2odd",
    # Sources
    "ParsedGraph",
    "parse_graph_source",
    # Errors
    "PdlError",
    "PreconditionError",
    "BudgetExhaustedError",
    "ConstructionError",
    "GirthError",
    "NotOuterplanarError",
    "LabelOverflowError",
    # Version
    "__version__",
]
