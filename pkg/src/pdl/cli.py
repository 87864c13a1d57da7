"""
Command-line interface for pdl.

Every command builds a JobSpec and hands it to run(), which returns the exit
code, a JSON-ready report and the human-readable lines. Exit codes:

    0  success / found
    1  verified negative, or search exhausted within its bound
    2  usage error or violated precondition
    3  budget exhausted
    4  internal error: a construction failed its own re-verification
"""

import json
import logging
import sys
from collections.abc import Callable
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, TypeVar

import click

from pdl import __version__
from pdl.constructors import (
    DEFAULT_AP_BUDGET,
    DEFAULT_SIEVE_BUDGET,
    complete_product_bound,
    label_complete,
    label_complete_power,
    label_K11c,
    label_K122,
    label_multipartite_via_ap,
    label_outerplanar,
    multipartite_product_bound,
)
from pdl.cycles import CycleLabelerTable, label_cycle_strict
from pdl.errors import (
    BudgetExhaustedError,
    ConstructionError,
    LabelOverflowError,
    PreconditionError,
)
from pdl.fixtures import reproduce_all
from pdl.graphs import Graph, optimal_coloring
from pdl.instruments import ppc_scan, ppn_bounds, twopower_demo
from pdl.labeling import Labeling, LabelingMode, edge_gap, verify
from pdl.search import (
    DEFAULT_LABEL_BOUND,
    DEFAULT_NODE_BUDGET,
    SearchConfig,
    SearchStatus,
    search_labeling,
)
from pdl.sources import ParsedGraph, get_supported_sources, parse_graph_source
from pdl.twoodd import decide_2odd, naive_2odd_oracle

logger = logging.getLogger(__name__)

REPORT_SCHEMA = "pdl.report/1"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4

COMMANDS = (
    "verify",
    "construct",
    "search",
    "ppn",
    "ppc",
    "twopower-demo",
    "2odd",
    "families",
    "reproduce",
    "info",
)
GRAPH_COMMANDS = {"verify", "construct", "search", "ppn", "2odd"}
OUTPUTS = ("human", "json")

_MAX_SHOWN = 10


@dataclass
class JobSpec:
    """One CLI invocation: a command, its graph source and its parameters."""

    command: str
    graph: str | None = None
    """Generator expression (K6, C9, P5, K_1_2_2) or graph JSON file."""

    labels: str | None = None
    """Comma-separated labels in vertex order, or a labeling JSON file."""

    mode: LabelingMode = LabelingMode.PRODUCT
    k: int = 1
    bound: int = DEFAULT_LABEL_BOUND
    node_budget: int = DEFAULT_NODE_BUDGET
    sieve_budget: int = DEFAULT_SIEVE_BUDGET
    ap_budget: int = DEFAULT_AP_BUDGET
    jobs: int = 1
    deterministic: bool = False
    all_pairs_gap: bool = False
    collect_all: bool = False
    symmetry: bool = True
    n_max: int = 9
    naive: bool = False
    table_overrides: dict[int, tuple[int, ...]] = field(default_factory=dict)
    """Replacement base odd cycles for the cycle table, keyed by k."""

    emit_dot: str | None = None
    output: str = "human"

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise PreconditionError(
                f"Unknown command: {self.command}. Supported: {', '.join(COMMANDS)}"
            )
        if self.output not in OUTPUTS:
            raise PreconditionError(f"output must be one of {', '.join(OUTPUTS)}")
        self.mode = LabelingMode(self.mode)
        if self.command in GRAPH_COMMANDS and not self.graph:
            raise PreconditionError(f"'{self.command}' needs a graph (--graph)")
        if self.command == "verify" and not self.labels:
            raise PreconditionError("'verify' needs labels (--labels)")
        if self.k < 1:
            raise PreconditionError(f"k must be >= 1, got {self.k}")

    def search_config(self) -> SearchConfig:
        return SearchConfig(
            label_bound=self.bound,
            mode=self.mode,
            k=self.k,
            node_budget=self.node_budget,
            symmetry=self.symmetry,
            deterministic=self.deterministic,
            jobs=self.jobs,
            all_pairs_gap=self.all_pairs_gap,
            collect_all=self.collect_all,
        )

    def cycle_table(self) -> CycleLabelerTable:
        if not self.table_overrides:
            return CycleLabelerTable()
        return CycleLabelerTable.with_overrides(self.table_overrides)


@dataclass
class JobResult:
    """Exit code, JSON report and human-readable lines of one run."""

    exit_code: int
    report: dict[str, Any]
    lines: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(self.report, indent=2)


def parse_labels(text: str) -> Labeling:
    """
    Read labels given as ``0,4,3485`` (vertex order) or as a labeling JSON file.

    Raises:
        PreconditionError: If the text is neither.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        return Labeling.from_json(stripped)
    if stripped.lower().endswith(".json"):
        path = Path(stripped)
        if not path.is_file():
            raise PreconditionError(f"Labeling file not found: {path}")
        return Labeling.from_json(path.read_text(encoding="utf-8"))
    try:
        values = [int(part) for part in stripped.split(",") if part.strip()]
    except ValueError as e:
        raise PreconditionError(f"Labels must be comma-separated integers: {text}") from e
    return Labeling.from_sequence(values)


def parse_table_override(text: str) -> tuple[int, tuple[int, ...]]:
    """Parse ``K=l0,l1,...`` into (k, labels)."""
    k_text, sep, labels_text = text.partition("=")
    if not sep:
        raise PreconditionError(f"Table override must look like K=l0,l1,...: {text}")
    try:
        return int(k_text), tuple(int(x) for x in labels_text.split(","))
    except ValueError as e:
        raise PreconditionError(f"Table override must look like K=l0,l1,...: {text}") from e


def to_dot(g: Graph, labeling: Labeling, name: str = "G") -> str:
    """DOT rendering with vertex labels and edge gaps."""
    lines = [f'graph "{name}" {{']
    for v in g.vertices:
        lines.append(f'  {v} [label="{v}: {labeling[v]}"];')
    for u, v in g.sorted_edges():
        lines.append(f'  {u} -- {v} [label="{edge_gap(labeling, u, v)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _labels_line(labeling: Labeling) -> str:
    values = labeling.as_sequence()
    return "   Labels: " + ", ".join(str(x) for x in values)


def _emit_dot(spec: JobSpec, parsed: ParsedGraph, labeling: Labeling, lines: list[str]) -> None:
    if spec.emit_dot and labeling is not None:
        dot = to_dot(parsed.graph, labeling, parsed.name)
        Path(spec.emit_dot).write_text(dot, encoding="utf-8")
        lines.append(f"   DOT written to {spec.emit_dot}")


def _is_complete(g: Graph, minimum: int = 3) -> bool:
    n = g.vertex_count
    return n >= minimum and g.edge_count == n * (n - 1) // 2


def _run_verify(spec: JobSpec) -> JobResult:
    parsed = parse_graph_source(spec.graph or "")
    assert spec.labels is not None
    labeling = parse_labels(spec.labels)
    report = verify(parsed.graph, labeling, spec.mode, spec.k, all_pairs_gap=spec.all_pairs_gap)
    lines = [f"\n🔍 Verifying {report.kind} labeling of {parsed.name}\n", _labels_line(labeling)]
    lines.append(f"   Edges checked: {report.edges_checked}")
    if report.violations:
        lines.append(f"\n⚠️  Violations ({report.violation_count}):")
        for violation in report.violations[:_MAX_SHOWN]:
            lines.append(f"   - {violation.message}")
        if report.violation_count > _MAX_SHOWN:
            lines.append(f"   ... and {report.violation_count - _MAX_SHOWN} more")
    _emit_dot(spec, parsed, labeling, lines)
    lines.append("\n✅ Labeling verified" if report.ok else "\n❌ Labeling rejected")
    return JobResult(
        EXIT_OK if report.ok else EXIT_NEGATIVE,
        {
            "status": "ok" if report.ok else "rejected",
            "graph": parsed.name,
            "labels": labeling.as_sequence(),
            "verification": report.to_dict(),
        },
        lines,
    )


def _construct(spec: JobSpec, parsed: ParsedGraph) -> tuple[Labeling | None, int, str]:
    """Pick a constructor for the graph and mode; returns (labeling, k, method)."""
    g = parsed.graph
    sizes = parsed.metadata.get("sizes")
    if spec.mode is LabelingMode.PRODUCT:
        if _is_complete(g):
            n = g.vertex_count
            return label_complete(n), complete_product_bound(n), "complete"
        parts = parsed.partition or optimal_coloring(g, spec.node_budget).color_classes()
        labeling = label_multipartite_via_ap(g, parts, spec.ap_budget)
        return labeling, multipartite_product_bound(parts.k), "ap-construction"
    if spec.mode is LabelingMode.POWER:
        if _is_complete(g, minimum=1):
            labeling, k = label_complete_power(g.vertex_count)
            return labeling, k, "complete-power"
        if sizes == [1, 2, 2]:
            return label_K122(), 1, "k122"
        if sizes is not None and len(sizes) == 3 and sizes[:2] == [1, 1]:
            return label_K11c(sizes[2], spec.sieve_budget), 1, "twin-primes"
        raise PreconditionError(
            f"No power-k construction for {parsed.name}; try 'pdl search --mode power'"
        )
    if parsed.source_family == "cycle":
        n = parsed.metadata["n"]
        labeling = label_cycle_strict(n, spec.k, spec.cycle_table(), spec.search_config())
        return labeling, spec.k, "cycle"
    labeling = label_outerplanar(g, parsed.embeddings, spec.k, spec.cycle_table())
    return labeling, spec.k, "outerplanar"


def _run_construct(spec: JobSpec) -> JobResult:
    parsed = parse_graph_source(spec.graph or "")
    labeling, k, method = _construct(spec, parsed)
    lines = [f"\n🔧 Constructing a {spec.mode.value} labeling of {parsed.name}\n"]
    lines.append(f"   Method: {method}")
    if labeling is None:
        phrase = f"|labels| <= {spec.bound} (up to translation)"
        lines.append(f"\n❌ No strict-{k} labeling of {parsed.name} obtained with {phrase}")
        return JobResult(
            EXIT_NEGATIVE,
            {
                "status": "not_found",
                "graph": parsed.name,
                "method": method,
                "labels": None,
                "summary": f"no strict-{k} labeling of {parsed.name} with {phrase}",
            },
            lines,
        )
    warnings = list(parsed.warnings)
    if spec.mode is not LabelingMode.STRICT and k > spec.k:
        warnings.append(f"construction needs k = {k}, above the requested k = {spec.k}")
    complete = spec.mode is LabelingMode.PRODUCT and method == "complete"
    report = verify(parsed.graph, labeling, spec.mode, k, all_pairs_gap=complete)
    lines.append(_labels_line(labeling))
    lines.append(f"   {report.to_summary()}")
    if warnings:
        lines.append(f"\n⚠️  Warnings ({len(warnings)}):")
        lines.extend(f"   - {w}" for w in warnings)
    _emit_dot(spec, parsed, labeling, lines)
    lines.append(f"\n✅ Constructed a verified {report.kind} labeling")
    return JobResult(
        EXIT_OK,
        {
            "status": "constructed",
            "graph": parsed.name,
            "method": method,
            "labels": labeling.as_sequence(),
            "verification": report.to_dict(),
            "warnings": warnings,
        },
        lines,
    )


def _run_search(spec: JobSpec) -> JobResult:
    parsed = parse_graph_source(spec.graph or "")
    cfg = spec.search_config()
    outcome = search_labeling(parsed.graph, cfg, graph_name=parsed.name)
    lines = [f"\n🔎 Searching for a {cfg.kind} labeling of {parsed.name}\n"]
    lines.append(f"   Bound: {outcome.bound_phrase()}")
    lines.append(f"   Nodes explored: {outcome.nodes_explored}")
    if outcome.certificate is not None:
        lines.append(_labels_line(outcome.certificate))
        _emit_dot(spec, parsed, outcome.certificate, lines)
    icon = {
        SearchStatus.FOUND: "✅",
        SearchStatus.EXHAUSTED: "❌",
        SearchStatus.BUDGET_OUT: "⏳",
    }
    lines.append(f"\n{icon[outcome.status]} {outcome.describe()}")
    code = {
        SearchStatus.FOUND: EXIT_OK,
        SearchStatus.EXHAUSTED: EXIT_NEGATIVE,
        SearchStatus.BUDGET_OUT: EXIT_BUDGET,
    }[outcome.status]
    report = outcome.to_dict()
    if cfg.collect_all:
        report["certificates"] = [c.as_sequence() for c in outcome.certificates]
    return JobResult(code, report, lines)


def _run_ppn(spec: JobSpec) -> JobResult:
    parsed = parse_graph_source(spec.graph or "")
    bounds = ppn_bounds(
        parsed.graph,
        spec.search_config(),
        graph_name=parsed.name,
        chromatic_budget=spec.node_budget,
        ap_budget=spec.ap_budget,
    )
    lines = [f"\n📐 Prime product number of {parsed.name}\n"]
    lines.append(f"   Chromatic number: {bounds.chromatic_number}")
    upper = "unknown" if bounds.upper is None else str(bounds.upper)
    lines.append(f"   Bounds: {bounds.lower} <= ppn <= {upper}")
    if bounds.certificate is not None:
        lines.append(f"   Certified by: {bounds.source}")
        lines.append(_labels_line(bounds.certificate))
    for note in bounds.evidence:
        lines.append(f"   - {note}")
    if bounds.exact:
        lines.append(f"\n✅ ppn({parsed.name}) = {bounds.lower}")
    elif bounds.upper is not None:
        lines.append(f"\n✅ {bounds.lower} <= ppn({parsed.name}) <= {bounds.upper}")
    else:
        lines.append("\n❌ No upper bound certified")
    report = {"status": "bounded", "graph": parsed.name, **bounds.to_dict()}
    return JobResult(EXIT_OK if bounds.upper is not None else EXIT_NEGATIVE, report, lines)


def _run_ppc(spec: JobSpec) -> JobResult:
    scan = ppc_scan(spec.k, spec.n_max, spec.search_config(), spec.cycle_table())
    lines = ["", scan.to_summary()]
    return JobResult(EXIT_OK, {"status": "scanned", **scan.to_dict()}, lines)


def _run_twopower(spec: JobSpec) -> JobResult:
    demo = twopower_demo(spec.k, spec.search_config())
    lines = [f"\n⚖️  Equal-parity prime {spec.k}-power labelings of K_4\n"]
    lines.append(f"   {demo.search.describe()}")
    lines.append(
        f"   K_7 labels {demo.witness_labeling.as_sequence()}: vertices "
        f"{list(demo.quadruple)} share a parity"
    )
    if demo.search.status is SearchStatus.BUDGET_OUT:
        code = EXIT_BUDGET
    else:
        code = EXIT_OK if demo.as_expected else EXIT_NEGATIVE
    icon = "✅" if demo.as_expected else "❌"
    lines.append(f"\n{icon} No four same-parity labels have prime power gaps within the bound")
    return JobResult(code, {"status": demo.search.status.value, **demo.to_dict()}, lines)


def _run_2odd(spec: JobSpec) -> JobResult:
    parsed = parse_graph_source(spec.graph or "")
    if spec.naive:
        witness = naive_2odd_oracle(parsed.graph)
    else:
        witness = decide_2odd(parsed.graph, budget=spec.node_budget)
    lines = [f"\n🎨 Is {parsed.name} 2-odd?\n"]
    if witness is None:
        lines.append(f"\n❌ {parsed.name} is not 2-odd")
        return JobResult(
            EXIT_NEGATIVE, {"status": "not_2odd", "graph": parsed.name, "witness": None}, lines
        )
    lines.append(f"   Red edges: {sorted(witness.red_edges)}")
    lines.append(f"   Blue edges: {sorted(witness.blue_edges)}")
    lines.append(f"\n✅ {parsed.name} is 2-odd")
    return JobResult(
        EXIT_OK, {"status": "2odd", "graph": parsed.name, "witness": witness.to_dict()}, lines
    )


def _run_families(spec: JobSpec) -> JobResult:
    sources = get_supported_sources()
    lines = ["\n📁 Graph sources\n", "-" * 60]
    for source in sources:
        lines.append(f"\n• {source['family_name']}: {source['syntax']}")
        lines.append(f"   {source['description']}")
        lines.append(f"   Examples: {', '.join(source['examples'])}")
    lines.append("\n" + "-" * 60)
    return JobResult(EXIT_OK, {"status": "ok", "families": sources}, lines)


def _run_reproduce(spec: JobSpec) -> JobResult:
    result = reproduce_all()
    lines = ["\n📚 Reference labelings\n"]
    for fixture in result.fixtures:
        icon = "✅" if fixture.as_expected else "❌"
        rejected = sum(p.rejected for p in fixture.perturbations)
        lines.append(
            f"{icon} {fixture.fixture.description}: verified={fixture.verified}, "
            f"{rejected}/{len(fixture.perturbations)} perturbations rejected"
        )
    bezout = result.bezout
    lines.append(
        f"{'✅' if bezout['collision'] is not None else '❌'} literal Bezout cycle for k=2 "
        f"(N={bezout['n']}) collides at {bezout['collision']}"
    )
    code = EXIT_OK if result.as_expected else EXIT_NEGATIVE
    return JobResult(code, {"status": "reproduced", **result.to_dict()}, lines)


def _run_info(spec: JobSpec) -> JobResult:
    table = spec.cycle_table()
    entries = {str(k): list(e.base_labels) for k, e in sorted(table.entries.items())}
    defaults = {
        "label_bound": DEFAULT_LABEL_BOUND,
        "node_budget": DEFAULT_NODE_BUDGET,
        "sieve_budget": DEFAULT_SIEVE_BUDGET,
        "ap_budget": DEFAULT_AP_BUDGET,
    }
    lines = [
        f"\n🔢 pdl v{__version__}: prime distance labelings\n",
        "⚙️  DEFAULTS",
        *(f"   {name}: {value}" for name, value in defaults.items()),
        "\n🔁 CYCLE TABLE (base odd cycles)",
        *(f"   k={k}: C_{len(labels)} {labels}" for k, labels in entries.items()),
        "\n📚 COMMANDS",
        *(f"   pdl {name}" for name in COMMANDS),
    ]
    return JobResult(
        EXIT_OK,
        {"status": "ok", "version": __version__, "defaults": defaults, "cycle_table": entries},
        lines,
    )


_RUNNERS: dict[str, Callable[[JobSpec], JobResult]] = {
    "verify": _run_verify,
    "construct": _run_construct,
    "search": _run_search,
    "ppn": _run_ppn,
    "ppc": _run_ppc,
    "twopower-demo": _run_twopower,
    "2odd": _run_2odd,
    "families": _run_families,
    "reproduce": _run_reproduce,
    "info": _run_info,
}


def _failure(code: int, error: Exception) -> JobResult:
    return JobResult(
        code,
        {"status": "error", "error": str(error), "error_type": type(error).__name__},
        [f"\n❌ {error}"],
    )


def run(spec: JobSpec) -> JobResult:
    """
    Execute one job.

    Precondition failures and labels outside the signed 64-bit range map to
    exit 2, exhausted budgets to exit 3 and constructions that fail their own
    re-verification to exit 4. Every failure still produces a report.
    """
    logger.debug("running %s", spec)
    try:
        result = _RUNNERS[spec.command](spec)
    except BudgetExhaustedError as e:
        result = _failure(EXIT_BUDGET, e)
    except (PreconditionError, LabelOverflowError) as e:
        result = _failure(EXIT_USAGE, e)
    except ConstructionError as e:
        logger.error("construction failed re-verification: %s", e)
        result = _failure(EXIT_INTERNAL, e)
    result.report = {
        "schema": REPORT_SCHEMA,
        "command": spec.command,
        "exit_code": result.exit_code,
        **result.report,
    }
    return result


def _execute(**params: Any) -> None:
    """Build a JobSpec from command parameters, run it and exit with its code."""
    output = params.get("output", "human")
    try:
        spec = JobSpec(**params)
    except PreconditionError as e:
        if output == "json":
            report = {
                "schema": REPORT_SCHEMA,
                "status": "error",
                "error": str(e),
                "exit_code": EXIT_USAGE,
            }
            click.echo(json.dumps(report))
            sys.exit(EXIT_USAGE)
        raise click.UsageError(str(e)) from e
    result = run(spec)
    if spec.output == "json":
        click.echo(result.to_json())
    else:
        stream_err = result.report.get("status") == "error"
        for line in result.lines:
            click.echo(line, err=stream_err)
        click.echo()
    sys.exit(result.exit_code)


F = TypeVar("F", bound=Callable[..., Any])


def _output_option(f: F) -> F:
    return click.option(
        "--output",
        "-o",
        type=click.Choice(OUTPUTS),
        default="human",
        show_default=True,
        help="Human-readable text or a JSON report on stdout",
    )(f)


def _graph_option(f: F) -> F:
    return click.option(
        "--graph",
        "-g",
        required=True,
        help="Generator expression (K6, C9, P5, K_1_2_2) or graph JSON file",
    )(f)


def _labeling_options(f: F) -> F:
    f = click.option("--k", "-k", default=1, show_default=True, type=int, help="Exponent k")(f)
    return click.option(
        "--mode",
        "-m",
        type=click.Choice([m.value for m in LabelingMode]),
        default=LabelingMode.PRODUCT.value,
        show_default=True,
        help="Labeling predicate",
    )(f)


def _search_options(f: F) -> F:
    options = [
        click.option(
            "--bound",
            "-b",
            default=DEFAULT_LABEL_BOUND,
            show_default=True,
            type=int,
            help="Label bound B (labelings fitting in [-B, B] after translation)",
        ),
        click.option(
            "--budget",
            "node_budget",
            default=DEFAULT_NODE_BUDGET,
            show_default=True,
            type=int,
            help="Search node budget",
        ),
        click.option(
            "--jobs",
            "-j",
            default=1,
            show_default=True,
            type=int,
            envvar="PDL_JOBS",
            help="Worker processes for search",
        ),
        click.option("--deterministic", is_flag=True, help="Force sequential search"),
        click.option(
            "--all-pairs-gap",
            is_flag=True,
            help="Product mode: non-adjacent labels must also differ by more than 1",
        ),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _table_option(f: F) -> F:
    return click.option(
        "--table",
        "table",
        multiple=True,
        help="Override the base odd cycle for one k, as K=l0,l1,... (repeatable)",
    )(f)


def _emit_dot_option(f: F) -> F:
    return click.option(
        "--emit-dot",
        type=click.Path(dir_okay=False),
        help="Write the labeled graph as DOT to this path",
    )(f)


def _overrides(table: tuple[str, ...]) -> dict[int, tuple[int, ...]]:
    try:
        return dict(parse_table_override(t) for t in table)
    except PreconditionError as e:
        raise click.BadParameter(str(e), param_hint="--table") from e


# Custom help class for better formatting
class CustomGroup(click.Group):
    """Custom group with an Examples section in its help."""

    def format_help(self, ctx: click.Context, formatter: click.HelpFormatter) -> None:
        self.format_usage(ctx, formatter)
        self.format_help_text(ctx, formatter)
        self.format_options(ctx, formatter)
        self.format_commands(ctx, formatter)

        formatter.write_paragraph()
        with formatter.section("Examples"):
            formatter.write_text("pdl construct --graph K6 --mode power --k 2")
            formatter.write_text(
                "pdl verify --graph C7 --labels 0,4,3485,3124,2283,74,25 --mode strict --k 2"
            )
            formatter.write_text("pdl search --graph K_1_2_3 --mode product --k 1 --bound 50")
            formatter.write_text("pdl ppc --k 2 --n-max 9")
            formatter.write_text("pdl families")


@click.group(cls=CustomGroup)
@click.version_option(version=__version__, prog_name="pdl")
@click.option("--verbose", "-v", is_flag=True, help="Log progress (DEBUG) to stderr")
def main(verbose: bool) -> None:
    """
    pdl - prime distance labelings of graphs.

    Verify, construct and search for labelings whose edge gaps are primes,
    prime powers or products of few primes.

    \b
    Exit codes:
      0  success / found
      1  rejected, or nothing found within the stated bound
      2  usage error
      3  budget exhausted
      4  internal error

    \b
    For more help on a specific command:
      pdl COMMAND --help
    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


@main.command(name="verify")
@_graph_option
@click.option("--labels", "-l", required=True, help="Labels in vertex order, or a JSON file")
@_labeling_options
@click.option(
    "--all-pairs-gap", is_flag=True, help="Product mode: check every pair, not just edges"
)
@_emit_dot_option
@_output_option
def verify_command(
    graph: str,
    labels: str,
    mode: str,
    k: int,
    all_pairs_gap: bool,
    emit_dot: str | None,
    output: str,
) -> None:
    """
    Check a labeling against a predicate, listing every violation.

    \b
    Examples:
      pdl verify --graph C7 --labels 0,4,3485,3124,2283,74,25 --mode strict --k 2
      pdl verify --graph K4 --labels 0,2,5,7 --mode power --k 1
    """
    _execute(
        command="verify",
        graph=graph,
        labels=labels,
        mode=mode,
        k=k,
        all_pairs_gap=all_pairs_gap,
        emit_dot=emit_dot,
        output=output,
    )


@main.command()
@_graph_option
@_labeling_options
@click.option(
    "--ap-budget",
    default=DEFAULT_AP_BUDGET,
    show_default=True,
    type=int,
    help="Candidate budget for the prime AP search",
)
@click.option(
    "--sieve-budget",
    default=DEFAULT_SIEVE_BUDGET,
    show_default=True,
    type=int,
    help="Sieve bound for twin primes",
)
@_search_options
@_table_option
@_emit_dot_option
@_output_option
def construct(
    graph: str,
    mode: str,
    k: int,
    ap_budget: int,
    sieve_budget: int,
    bound: int,
    node_budget: int,
    jobs: int,
    deterministic: bool,
    all_pairs_gap: bool,
    table: tuple[str, ...],
    emit_dot: str | None,
    output: str,
) -> None:
    """
    Build a labeling with the constructor matching the graph and mode.

    \b
    product: complete graphs, else the prime AP construction
    power:   K_n (n <= 6), K_{1,2,2}, K_{1,1,c}
    strict:  cycles, outerplanar graphs of large girth

    \b
    Examples:
      pdl construct --graph K6 --mode power --k 2
      pdl construct --graph C9 --mode strict --k 2
      pdl construct --graph K_1_2_2 --mode power
    """
    _execute(
        command="construct",
        graph=graph,
        mode=mode,
        k=k,
        ap_budget=ap_budget,
        sieve_budget=sieve_budget,
        bound=bound,
        node_budget=node_budget,
        jobs=jobs,
        deterministic=deterministic,
        all_pairs_gap=all_pairs_gap,
        table_overrides=_overrides(table),
        emit_dot=emit_dot,
        output=output,
    )


@main.command()
@_graph_option
@_labeling_options
@_search_options
@click.option("--collect-all", is_flag=True, help="Enumerate every certificate within the bound")
@click.option("--no-symmetry", is_flag=True, help="Search [-B, B] without the translation quotient")
@_emit_dot_option
@_output_option
def search(
    graph: str,
    mode: str,
    k: int,
    bound: int,
    node_budget: int,
    jobs: int,
    deterministic: bool,
    all_pairs_gap: bool,
    collect_all: bool,
    no_symmetry: bool,
    emit_dot: str | None,
    output: str,
) -> None:
    """
    Bounded exhaustive search for a labeling.

    A negative answer only covers labelings within the bound.

    \b
    Examples:
      pdl search --graph K_1_2_3 --mode product --k 1 --bound 50
      pdl search --graph C3 --mode strict --k 2 --bound 10000
      pdl search --graph K_1_2_2 --bound 30 --collect-all --output json
    """
    _execute(
        command="search",
        graph=graph,
        mode=mode,
        k=k,
        bound=bound,
        node_budget=node_budget,
        jobs=jobs,
        deterministic=deterministic,
        all_pairs_gap=all_pairs_gap,
        collect_all=collect_all,
        symmetry=not no_symmetry,
        emit_dot=emit_dot,
        output=output,
    )


@main.command()
@_graph_option
@_search_options
@click.option(
    "--ap-budget",
    default=DEFAULT_AP_BUDGET,
    show_default=True,
    type=int,
    help="Candidate budget for the prime AP search",
)
@_output_option
def ppn(
    graph: str,
    bound: int,
    node_budget: int,
    jobs: int,
    deterministic: bool,
    all_pairs_gap: bool,
    ap_budget: int,
    output: str,
) -> None:
    """
    Bound the prime product number of a graph.

    \b
    Examples:
      pdl ppn --graph K8
      pdl ppn --graph K_1_2_2 --bound 30
    """
    _execute(
        command="ppn",
        graph=graph,
        bound=bound,
        node_budget=node_budget,
        jobs=jobs,
        deterministic=deterministic,
        all_pairs_gap=all_pairs_gap,
        ap_budget=ap_budget,
        output=output,
    )


@main.command()
@click.option("--k", "-k", default=2, show_default=True, type=int, help="Exponent k")
@click.option("--n-max", default=9, show_default=True, type=int, help="Longest cycle to scan")
@_search_options
@_table_option
@_output_option
def ppc(
    k: int,
    n_max: int,
    bound: int,
    node_budget: int,
    jobs: int,
    deterministic: bool,
    all_pairs_gap: bool,
    table: tuple[str, ...],
    output: str,
) -> None:
    """
    Scan cycles C_3..C_n for strict prime kth-power labelings.

    Reports what was constructed, found or left unknown; never a value of ppc.

    \b
    Examples:
      pdl ppc --k 2 --n-max 9
      pdl ppc --k 1 --n-max 7 --output json
    """
    _execute(
        command="ppc",
        mode=LabelingMode.STRICT,
        k=k,
        n_max=n_max,
        bound=bound,
        node_budget=node_budget,
        jobs=jobs,
        deterministic=deterministic,
        all_pairs_gap=all_pairs_gap,
        table_overrides=_overrides(table),
        output=output,
    )


@main.command("twopower-demo")
@click.option("--k", "-k", default=1, show_default=True, type=int, help="Exponent k")
@_search_options
@_output_option
def twopower_demo_command(
    k: int,
    bound: int,
    node_budget: int,
    jobs: int,
    deterministic: bool,
    all_pairs_gap: bool,
    output: str,
) -> None:
    """
    Show that four same-parity labels cannot have prime power gaps.

    \b
    Examples:
      pdl twopower-demo --k 2 --bound 60
    """
    _execute(
        command="twopower-demo",
        mode=LabelingMode.POWER,
        k=k,
        bound=bound,
        node_budget=node_budget,
        jobs=jobs,
        deterministic=deterministic,
        all_pairs_gap=all_pairs_gap,
        output=output,
    )


@main.command("2odd")
@_graph_option
@click.option(
    "--budget",
    "node_budget",
    default=2**20,
    show_default=True,
    type=int,
    help="Maximum parity assignments to try",
)
@click.option("--naive", is_flag=True, help="Use the literal red/blue cycle check (<= 20 edges)")
@_output_option
def two_odd(graph: str, node_budget: int, naive: bool, output: str) -> None:
    """
    Decide whether a graph is 2-odd and print a red/blue witness.

    \b
    Examples:
      pdl 2odd --graph K4
      pdl 2odd --graph K_2_2_2 --naive
    """
    _execute(command="2odd", graph=graph, node_budget=node_budget, naive=naive, output=output)


@main.command()
@_output_option
def families(output: str) -> None:
    """
    List the graph expressions and documents --graph accepts.

    \b
    Examples:
      pdl families
    """
    _execute(command="families", output=output)


@main.command()
@_output_option
def reproduce(output: str) -> None:
    """
    Verify every reference labeling and reject its +1 perturbations.

    \b
    Examples:
      pdl reproduce
    """
    _execute(command="reproduce", output=output)


@main.command()
@_output_option
def info(output: str) -> None:
    """
    Show version, defaults and the cycle table.

    \b
    Examples:
      pdl info
    """
    _execute(command="info", output=output)


if __name__ == "__main__":
    main()
