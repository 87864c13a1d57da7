"""
Explicit labelings that serve as reference fixtures.

Each fixture is checked twice: as given it must pass its verifier, and every
copy with a single label raised by 1 must fail (either a gap breaks the
predicate or two labels collide).
"""

import logging
from dataclasses import dataclass, field
from typing import Any

from pdl.constructors import K4_PRIME_LABELS, K6_SQUARE_LABELS, K122_LABELS
from pdl.cycles import C7_SQUARE_LABELS, literal_bezout_candidate
from pdl.errors import PreconditionError
from pdl.labeling import Labeling, LabelingMode, verify
from pdl.sources import parse_graph_source

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fixture:
    """A graph expression, its labels and the predicate they satisfy."""

    name: str
    graph: str
    labels: tuple[int, ...]
    mode: LabelingMode
    k: int
    description: str = ""


FIXTURES: tuple[Fixture, ...] = (
    Fixture(
        "c7-strict-2",
        "C7",
        C7_SQUARE_LABELS,
        LabelingMode.STRICT,
        2,
        "strict prime square labeling of C_7",
    ),
    Fixture(
        "k6-power-2",
        "K6",
        K6_SQUARE_LABELS,
        LabelingMode.POWER,
        2,
        "prime square power labeling of K_6",
    ),
    Fixture(
        "k4-power-1",
        "K4",
        K4_PRIME_LABELS,
        LabelingMode.POWER,
        1,
        "prime distance labeling of K_4",
    ),
    Fixture(
        "k122-power-1",
        "K_1_2_2",
        K122_LABELS,
        LabelingMode.POWER,
        1,
        "prime distance labeling of K_{1,2,2}",
    ),
)


@dataclass
class PerturbationResult:
    vertex: int
    labels: tuple[int, ...]
    rejected: bool
    reason: str


@dataclass
class FixtureResult:
    """What reproduce_fixture observed for one fixture."""

    fixture: Fixture
    verified: bool
    summary: str
    perturbations: list[PerturbationResult] = field(default_factory=list)

    @property
    def as_expected(self) -> bool:
        return self.verified and all(p.rejected for p in self.perturbations)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.fixture.name,
            "graph": self.fixture.graph,
            "labels": list(self.fixture.labels),
            "kind": f"{self.fixture.mode.value}-{self.fixture.k}",
            "verified": self.verified,
            "perturbations_rejected": sum(p.rejected for p in self.perturbations),
            "perturbations": len(self.perturbations),
            "as_expected": self.as_expected,
        }


def reproduce_fixture(fixture: Fixture) -> FixtureResult:
    """Verify a fixture and all of its +1 perturbations."""
    g = parse_graph_source(fixture.graph).graph
    report = verify(g, Labeling.from_sequence(fixture.labels), fixture.mode, fixture.k)
    result = FixtureResult(fixture, report.ok, report.to_summary())
    for v in g.vertices:
        bumped = list(fixture.labels)
        bumped[v] += 1
        try:
            perturbed = verify(g, Labeling.from_sequence(bumped), fixture.mode, fixture.k)
            rejected = not perturbed.ok
            reason = ", ".join(sorted({x.reason for x in perturbed.violations})) or "accepted"
        except PreconditionError as e:
            rejected, reason = True, str(e)
        result.perturbations.append(PerturbationResult(v, tuple(bumped), rejected, reason))
    logger.debug("fixture %s: %s", fixture.name, "ok" if result.as_expected else "unexpected")
    return result


@dataclass
class ReproductionReport:
    fixtures: list[FixtureResult]
    bezout: dict[str, Any]
    """The literal k=2 Bezout coefficients and the label they collide on."""

    @property
    def as_expected(self) -> bool:
        return all(f.as_expected for f in self.fixtures) and self.bezout["collision"] is not None

    def to_dict(self) -> dict[str, Any]:
        return {
            "fixtures": [f.to_dict() for f in self.fixtures],
            "literal_bezout": self.bezout,
            "as_expected": self.as_expected,
        }


def reproduce_all() -> ReproductionReport:
    """Check every fixture and that the literal k=2 Bezout candidate is rejected."""
    return ReproductionReport(
        fixtures=[reproduce_fixture(f) for f in FIXTURES],
        bezout=literal_bezout_candidate(2).to_dict(),
    )


def get_fixture(name: str) -> Fixture:
    for fixture in FIXTURES:
        if fixture.name == name:
            return fixture
    raise PreconditionError(
        f"Unknown fixture: {name}. Supported: {', '.join(f.name for f in FIXTURES)}"
    )
