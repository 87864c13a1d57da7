"""Tests for strict cycle labelings."""

import pytest

from pdl.cycles import (
    C3_PRIME_LABELS,
    C7_SQUARE_LABELS,
    BezoutCandidate,
    CycleLabelerTable,
    CycleTableEntry,
    _existence_entry,
    bezout_candidates,
    construct_cycle_strict,
    existence_cycle,
    extend_odd_cycle,
    label_cycle_strict,
    label_even_cycle,
    literal_bezout_candidate,
)
from pdl.errors import PreconditionError
from pdl.graphs import cycle_graph
from pdl.labeling import Labeling, verify_strict


def _gaps(labeling: Labeling) -> list[int]:
    seq = labeling.as_sequence()
    return [abs(seq[i] - seq[(i + 1) % len(seq)]) for i in range(len(seq))]


class TestEvenCycles:
    """Test label_even_cycle."""

    @pytest.mark.parametrize("n", range(2, 9))
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_verifies(self, n: int, k: int) -> None:
        """Test C_{2n} for every n in [2, 8] and k in [1, 3]."""
        labeling = label_even_cycle(n, k)
        assert len(labeling) == 2 * n
        assert verify_strict(cycle_graph(2 * n), labeling, k).ok

    def test_default_primes(self) -> None:
        """Test the labels for C_6 at k = 2 with the smallest primes."""
        assert label_even_cycle(3, 2).as_sequence() == [0, 4, 13, 38, 34, 25]

    def test_explicit_primes(self) -> None:
        """Test caller-supplied primes."""
        assert label_even_cycle(3, 2, primes=[2, 3, 7]).as_sequence() == [0, 4, 13, 62, 58, 49]

    def test_explicit_primes_must_dominate(self) -> None:
        """Test that the last prime power must exceed the others' sum."""
        with pytest.raises(PreconditionError, match="must exceed"):
            label_even_cycle(3, 2, primes=[2, 3, 3])
        with pytest.raises(PreconditionError, match="Need 3 primes"):
            label_even_cycle(3, 2, primes=[2, 3])

    def test_rejects_small_n(self) -> None:
        """Test the n >= 2 precondition."""
        with pytest.raises(PreconditionError):
            label_even_cycle(1, 1)


class TestOddExtension:
    """Test extend_odd_cycle."""

    @pytest.mark.parametrize("j", range(1, 6))
    def test_extends_triangle(self, j: int) -> None:
        """Test C_3 -> C_{3+2j} at k = 1."""
        labeling = extend_odd_cycle(Labeling.from_sequence(C3_PRIME_LABELS), j, 1)
        assert len(labeling) == 3 + 2 * j
        assert verify_strict(cycle_graph(3 + 2 * j), labeling, 1).ok

    @pytest.mark.parametrize("j", range(1, 6))
    def test_extends_square_heptagon(self, j: int) -> None:
        """Test C_7 -> C_{7+2j} at k = 2."""
        labeling = extend_odd_cycle(Labeling.from_sequence(C7_SQUARE_LABELS), j, 2)
        assert verify_strict(cycle_graph(7 + 2 * j), labeling, 2).ok

    def test_pentagon_from_triangle(self) -> None:
        """Test the exact labels of C_5 built from C_3."""
        labeling = extend_odd_cycle(Labeling.from_sequence(C3_PRIME_LABELS), 1, 1)
        assert labeling.as_sequence() == [0, 2, 13, 16, 11]

    def test_rejects_invalid_base(self) -> None:
        """Test that the base must be a strict labeling of an odd cycle."""
        with pytest.raises(PreconditionError, match="odd cycle"):
            extend_odd_cycle(Labeling.from_sequence([0, 2, 5, 7]), 1, 1)
        with pytest.raises(PreconditionError, match="not a strict"):
            extend_odd_cycle(Labeling.from_sequence([0, 2, 6]), 1, 1)
        with pytest.raises(PreconditionError, match="j must be"):
            extend_odd_cycle(Labeling.from_sequence(C3_PRIME_LABELS), 0, 1)


class TestBezout:
    """Test the Bezout existence construction."""

    @pytest.mark.parametrize(("k", "expected_n"), [(1, 3), (2, 9), (3, 57)])
    def test_existence_cycle(self, k: int, expected_n: int) -> None:
        """Test that the shortest collision-free cycle verifies with one seam gap."""
        n, labeling = existence_cycle(k)
        assert n == expected_n
        assert n % 2 == 1
        assert verify_strict(cycle_graph(n), labeling, k).ok
        assert _gaps(labeling).count(2**k) == 1

    def test_square_cycle_labels(self) -> None:
        """Test the nine labels found for k = 2."""
        _, labeling = existence_cycle(2)
        assert labeling.as_sequence() == [0, 9, 18, 27, 36, 45, 54, 50, 25]

    def test_literal_coefficients_collide(self) -> None:
        """Test that r = -11, s = 4 repeats the label 225."""
        candidate = literal_bezout_candidate(2)
        assert (candidate.a, candidate.b) == (-44, 16)
        assert candidate.n == 61
        assert candidate.collision() == 225
        with pytest.raises(PreconditionError, match="Duplicate label 225"):
            Labeling.from_sequence(candidate.labels())

    def test_candidates_sorted_by_length(self) -> None:
        """Test the candidate family order."""
        lengths = [c.n for c in bezout_candidates(2)]
        assert lengths == sorted(lengths)
        assert lengths[0] == 9

    def test_identity_enforced(self) -> None:
        """Test BezoutCandidate validation."""
        with pytest.raises(PreconditionError, match="Bezout identity"):
            BezoutCandidate(1, 5, 3, -1, 2)


class TestCycleLabelerTable:
    """Test the base cycle table."""

    def test_defaults(self) -> None:
        """Test the built-in entries for k = 1 and k = 2."""
        table = CycleLabelerTable()
        assert table.ppc_upper_bound(1) == 3
        assert table.ppc_upper_bound(2) == 7
        assert table.entry(2).base_labels == C7_SQUARE_LABELS

    def test_falls_back_to_bezout(self) -> None:
        """Test that k = 3 uses the existence cycle."""
        entry = CycleLabelerTable().entry(3)
        assert entry.base_length == 57
        assert entry.source == "Bezout cycle"

    def test_bezout_entry_computed_once(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that repeated lookups for k = 3 reuse one existence cycle."""
        calls = []

        def counting(k: int) -> tuple[int, Labeling]:
            calls.append(k)
            return existence_cycle(k)

        _existence_entry.cache_clear()
        monkeypatch.setattr("pdl.cycles.existence_cycle", counting)
        first = CycleLabelerTable().entry(3)
        second = CycleLabelerTable.with_overrides({2: C7_SQUARE_LABELS}).entry(3)
        assert first is second
        assert CycleLabelerTable().ppc_upper_bound(3) == 57
        assert calls == [3]

    def test_read_only(self) -> None:
        """Test that entries cannot be replaced after construction."""
        table = CycleLabelerTable()
        with pytest.raises(TypeError):
            table.entries[1] = table.entries[2]  # type: ignore[index]

    def test_rejects_bad_override(self) -> None:
        """Test that an override must verify."""
        with pytest.raises(PreconditionError, match="fails strict verification"):
            CycleLabelerTable.with_overrides({2: [0, 4, 13, 38, 34]})
        with pytest.raises(PreconditionError, match="odd cycle"):
            CycleLabelerTable({1: CycleTableEntry(1, (0, 2, 5, 7), "even")})

    def test_override_changes_base(self) -> None:
        """Test replacing the k = 2 base with the Bezout C_9."""
        _, labeling = existence_cycle(2)
        table = CycleLabelerTable.with_overrides({2: labeling.as_sequence()})
        assert table.ppc_upper_bound(2) == 9
        assert construct_cycle_strict(7, 2, table) is None


class TestLabelCycleStrict:
    """Test the cycle dispatcher."""

    @pytest.mark.parametrize("n", [4, 6, 7, 8, 9, 11])
    def test_constructed_lengths(self, n: int) -> None:
        """Test lengths covered by construction at k = 2."""
        labeling = construct_cycle_strict(n, 2)
        assert labeling is not None
        assert verify_strict(cycle_graph(n), labeling, 2).ok

    def test_short_odd_cycle_is_not_constructed(self) -> None:
        """Test that C_5 at k = 2 is below the table's base."""
        assert construct_cycle_strict(5, 2) is None

    def test_rejects_short_cycle(self) -> None:
        """Test the n >= 3 precondition."""
        with pytest.raises(PreconditionError):
            label_cycle_strict(2, 1)

    def test_triangle_prime(self) -> None:
        """Test that C_3 at k = 1 is the base entry."""
        labeling = label_cycle_strict(3, 1)
        assert labeling is not None
        assert labeling.as_sequence() == list(C3_PRIME_LABELS)
