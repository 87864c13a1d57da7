"""
Strict prime kth-power labelings of cycles.

Vertex i of C_n sits at position i of the cycle, so a labeling of C_n is just
the sequence of labels around the cycle.
"""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cache
from types import MappingProxyType
from typing import TYPE_CHECKING

from pdl.errors import ConstructionError, PreconditionError
from pdl.graphs import cycle_graph
from pdl.labeling import Labeling, verify_strict
from pdl.ntheory import checked_power, is_prime, next_prime, smallest_prime_power_above

if TYPE_CHECKING:
    from pdl.search import SearchConfig

logger = logging.getLogger(__name__)

C3_PRIME_LABELS = (0, 2, 5)
C7_SQUARE_LABELS = (0, 4, 3485, 3124, 2283, 74, 25)


def _certify_cycle(labels: Sequence[int], k: int, what: str) -> Labeling:
    """Wrap labels as a labeling of C_n and re-verify it, failing loudly."""
    try:
        labeling = Labeling.from_sequence(labels)
    except PreconditionError as e:
        raise ConstructionError(f"{what} produced repeated labels: {e}") from e
    report = verify_strict(cycle_graph(len(labels)), labeling, k)
    if not report.ok:
        raise ConstructionError(f"{what} failed verification:\n{report.to_summary()}")
    return labeling


def label_even_cycle(
    n: int, k: int, min_prime: int = 2, primes: Sequence[int] | None = None
) -> Labeling:
    """
    Strict prime kth-power labeling of C_{2n}.

    Labels climb by p_1^k, ..., p_n^k and come back down by p_1^k, ..., p_n^k,
    where p_n^k exceeds the sum of the other powers.

    Args:
        n: Half the cycle length, n >= 2.
        k: Exponent.
        min_prime: Smallest prime allowed when choosing primes.
        primes: Explicit primes p_1..p_n; must satisfy the sum condition.
    """
    if n < 2:
        raise PreconditionError(f"label_even_cycle needs n >= 2, got {n}")
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    if primes is None:
        chosen = [min_prime if is_prime(min_prime) else next_prime(min_prime)]
        while len(chosen) < n - 1:
            chosen.append(next_prime(chosen[-1]))
        head = sum(checked_power(p, k) for p in chosen)
        last, _ = smallest_prime_power_above(head, k, chosen[-1] + 1)
        chosen.append(last)
    else:
        chosen = list(primes)
        if len(chosen) != n or not all(is_prime(p) for p in chosen):
            raise PreconditionError(f"Need {n} primes, got {chosen}")
        head = sum(checked_power(p, k) for p in chosen[:-1])
        if checked_power(chosen[-1], k) <= head:
            raise PreconditionError(f"{chosen[-1]}^{k} must exceed {head}")
    powers = [checked_power(p, k) for p in chosen]
    ascending = [sum(powers[:j]) for j in range(n)]
    descending = [sum(powers[i:]) for i in range(n)]
    return _certify_cycle(ascending + descending, k, f"Even cycle C_{2 * n}")


def extend_odd_cycle(base: Labeling, j: int, k: int, min_prime: int = 2) -> Labeling:
    """
    Extend a strict labeling of C_{2n+1} to one of C_{2n+2j+1}.

    The base walk is split after its first step and 2j new edges with gaps
    q_1^k..q_j^k are spliced in (up, then back down), where each q_i^k exceeds
    the sum of the base labels' absolute values plus the earlier q powers.

    Raises:
        PreconditionError: If base is not a strict labeling of an odd cycle.
        ConstructionError: If the result fails re-verification.
    """
    if j < 1:
        raise PreconditionError(f"j must be >= 1, got {j}")
    size = len(base)
    if size < 3 or size % 2 == 0 or base.domain != frozenset(range(size)):
        raise PreconditionError("Base must label an odd cycle on vertices 0..2n")
    if not verify_strict(cycle_graph(size), base, k).ok:
        raise PreconditionError(f"Base labeling is not a strict {k}th-power labeling of C_{size}")
    walk = [x - base[0] for x in base.as_sequence()]
    d1 = walk[1]
    total = sum(abs(x) for x in walk)
    q_powers: list[int] = []
    q = min_prime - 1
    for _ in range(j):
        q, power = smallest_prime_power_above(total + sum(q_powers), k, max(q + 1, min_prime))
        q_powers.append(power)
    prefix = [sum(q_powers[:i]) for i in range(j + 1)]
    top = prefix[j]
    labels = [0, d1]
    labels += [d1 + prefix[i] for i in range(1, j + 1)]
    labels += [walk[t] + top for t in range(2, size)]
    labels += [top - prefix[i] for i in range(j)]
    logger.debug("Extended C_%d by %d with q powers %s", size, 2 * j, q_powers)
    return _certify_cycle(labels, k, f"Odd cycle extension C_{size} -> C_{size + 2 * j}")


@dataclass(frozen=True)
class BezoutCandidate:
    """
    One member of the family A*b + D*a = 2^k with a < 0 < b.

    The cycle climbs b steps of A from 0, takes the 2^k seam down to -a*D, and
    descends in steps of D back to 0, giving N = b - a + 1 vertices.
    """

    k: int
    ascending: int
    descending: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.ascending * self.b + self.descending * self.a != 2**self.k:
            raise PreconditionError(f"{self} does not satisfy the Bezout identity")
        if not (self.a < 0 < self.b):
            raise PreconditionError(f"Need a < 0 < b, got a={self.a}, b={self.b}")

    @property
    def n(self) -> int:
        return self.b - self.a + 1

    def labels(self) -> list[int]:
        up = [m * self.ascending for m in range(self.b + 1)]
        down = [m * self.descending for m in range(-self.a, 0, -1)]
        return up + down

    def collision(self) -> int | None:
        """Smallest label reached both climbing and descending, if any."""
        up = {m * self.ascending for m in range(1, self.b + 1)}
        down = {m * self.descending for m in range(1, -self.a + 1)}
        both = up & down
        return min(both) if both else None

    def to_dict(self) -> dict[str, int | None]:
        return {
            "k": self.k,
            "ascending": self.ascending,
            "descending": self.descending,
            "a": self.a,
            "b": self.b,
            "n": self.n,
            "collision": self.collision(),
        }


def bezout_candidates(k: int, limit: int = 3) -> list[BezoutCandidate]:
    """
    Shifted Bezout solutions for both role assignments of 3^k and 5^k.

    For each assignment the smallest positive b is taken and then shifted
    `limit - 1` more times; results are sorted by cycle length.
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    seam = 2**k
    three, five = checked_power(3, k), checked_power(5, k)
    found = []
    for up, down in ((five, three), (three, five)):
        b0 = seam * pow(up, -1, down) % down
        a0 = (seam - up * b0) // down
        for t in range(limit):
            found.append(BezoutCandidate(k, up, down, a0 - t * up, b0 + t * down))
    return sorted(found, key=lambda c: (c.n, c.ascending))


def literal_bezout_candidate(k: int) -> BezoutCandidate:
    """The candidate from the smallest positive s with 3^k r + 5^k s = 1, scaled by 2^k."""
    three, five = checked_power(3, k), checked_power(5, k)
    s = pow(five, -1, three)
    r = (1 - five * s) // three
    return BezoutCandidate(k, five, three, 2**k * r, 2**k * s)


def existence_cycle(k: int, limit: int = 3) -> tuple[int, Labeling]:
    """
    Shortest collision-free odd cycle from the Bezout family.

    Returns:
        (N, strict kth-power labeling of C_N).
    """
    for candidate in bezout_candidates(k, limit):
        if candidate.collision() is None:
            labeling = _certify_cycle(candidate.labels(), k, f"Bezout cycle C_{candidate.n}")
            return candidate.n, labeling
        logger.info("Bezout candidate %s rejected: collision", candidate.to_dict())
    raise ConstructionError(f"No collision-free Bezout candidate for k={k} within {limit} shifts")


@dataclass(frozen=True)
class CycleTableEntry:
    """A verified base odd cycle for one exponent."""

    k: int
    base_labels: tuple[int, ...]
    source: str

    @property
    def base_length(self) -> int:
        return len(self.base_labels)

    @property
    def ppc_upper_bound(self) -> int:
        """Every cycle of length >= this is constructible."""
        return self.base_length

    def base_labeling(self) -> Labeling:
        return Labeling.from_sequence(self.base_labels)


@cache
def _existence_entry(k: int) -> CycleTableEntry:
    """Table entry built from the existence cycle, computed once per k."""
    _, labeling = existence_cycle(k)
    return CycleTableEntry(k, tuple(labeling.as_sequence()), "Bezout cycle")


def _default_entries() -> dict[int, CycleTableEntry]:
    return {
        1: CycleTableEntry(1, C3_PRIME_LABELS, "C_3 prime labeling"),
        2: CycleTableEntry(2, C7_SQUARE_LABELS, "C_7 square labeling"),
    }


@dataclass(frozen=True)
class CycleLabelerTable:
    """
    Known base odd cycles per exponent.

    k = 1 uses C_3 and k = 2 the C_7 square labeling; other exponents fall back
    to the shortest collision-free Bezout cycle. Entries are verified on
    construction and the table is read-only afterwards.
    """

    entries: Mapping[int, CycleTableEntry] = field(default_factory=_default_entries)

    def __post_init__(self) -> None:
        for k, entry in self.entries.items():
            if entry.k != k or entry.base_length % 2 == 0:
                raise PreconditionError(f"Table entry for k={k} must be an odd cycle for k={k}")
            if not verify_strict(cycle_graph(entry.base_length), entry.base_labeling(), k).ok:
                raise PreconditionError(f"Table entry for k={k} fails strict verification")
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    @classmethod
    def with_overrides(cls, overrides: Mapping[int, Iterable[int]]) -> "CycleLabelerTable":
        entries = _default_entries()
        for k, labels in overrides.items():
            entries[k] = CycleTableEntry(k, tuple(labels), "override")
        return cls(entries)

    def entry(self, k: int) -> CycleTableEntry:
        if k in self.entries:
            return self.entries[k]
        return _existence_entry(k)

    def ppc_upper_bound(self, k: int) -> int:
        return self.entry(k).ppc_upper_bound


def construct_cycle_strict(
    n: int, k: int, table: CycleLabelerTable | None = None
) -> Labeling | None:
    """Constructive part of label_cycle_strict: None for odd n below the table's base."""
    if n < 3:
        raise PreconditionError(f"Cycle length must be >= 3, got {n}")
    if n % 2 == 0:
        return label_even_cycle(n // 2, k)
    entry = (table or CycleLabelerTable()).entry(k)
    if n < entry.base_length:
        return None
    if n == entry.base_length:
        return entry.base_labeling()
    return extend_odd_cycle(entry.base_labeling(), (n - entry.base_length) // 2, k)


def label_cycle_strict(
    n: int,
    k: int,
    table: CycleLabelerTable | None = None,
    search_config: "SearchConfig | None" = None,
) -> Labeling | None:
    """
    Strict prime kth-power labeling of C_n, or None if not obtained.

    Even cycles and odd cycles at least as long as the table's base are
    constructed; shorter odd cycles go to bounded search. None never means
    the labeling does not exist.
    """
    constructed = construct_cycle_strict(n, k, table)
    if constructed is not None:
        return constructed
    from pdl.labeling import LabelingMode
    from pdl.search import SearchConfig, search_labeling

    cfg = search_config or SearchConfig()
    cfg = cfg.replace(mode=LabelingMode.STRICT, k=k)
    outcome = search_labeling(cycle_graph(n), cfg)
    logger.info("C_%d strict-%d search: %s", n, k, outcome.describe())
    return outcome.certificate
