"""Tests for the ntheory module."""

import pytest

from pdl.errors import BudgetExhaustedError, LabelOverflowError, PreconditionError
from pdl.ntheory import (
    PrimeAP,
    PrimePower,
    TwinPair,
    ceil_log2,
    checked_power,
    classify_prime_power,
    count_prime_factors,
    find_prime_ap,
    integer_root,
    is_prime,
    next_prime,
    omega_table,
    prime_powers_up_to,
    primes_up_to,
    primorial,
    smallest_prime_power_above,
    strict_kth_power_base,
    twin_primes,
    verify_prime_ap,
)


class TestPrimality:
    """Test is_prime and friends."""

    def test_small_values(self) -> None:
        """Test primality of small integers against the sieve."""
        sieve = set(int(p) for p in primes_up_to(2000))
        for n in range(-5, 2001):
            assert is_prime(n) == (n in sieve), n

    def test_word_sized_values(self) -> None:
        """Test large primes and strong pseudoprimes near the top of the range."""
        assert is_prime(2**61 - 1)
        assert is_prime(18446744073709551557)  # largest prime below 2**64
        assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
        assert not is_prime(3825123056546413051)
        assert not is_prime((2**31 - 1) * (2**31 - 1))

    def test_beyond_word_range(self) -> None:
        """Test that odd inputs of 2**64 or more are refused."""
        with pytest.raises(LabelOverflowError):
            is_prime(2**64 + 1)

    def test_next_prime(self) -> None:
        """Test next_prime steps strictly upward."""
        assert next_prime(-3) == 2
        assert next_prime(2) == 3
        assert next_prime(13) == 17
        assert next_prime(7919) == 7927

    def test_smallest_prime_power_above(self) -> None:
        """Test the 'choose a prime larger than' helper."""
        assert smallest_prime_power_above(10, 1) == (11, 11)
        assert smallest_prime_power_above(24, 2) == (5, 25)
        assert smallest_prime_power_above(25, 2) == (7, 49)
        assert smallest_prime_power_above(0, 3, min_prime=5) == (5, 125)


class TestArithmeticHelpers:
    """Test word-range arithmetic helpers."""

    def test_integer_root(self) -> None:
        """Test exact and inexact integer roots."""
        assert integer_root(0, 3) == 0
        assert integer_root(26, 2) == 5
        assert integer_root(125, 3) == 5
        assert integer_root(124, 3) == 4
        assert integer_root(2**62, 62) == 2

    def test_ceil_log2(self) -> None:
        """Test ceil(log2 n) at powers of two and between them."""
        assert [ceil_log2(n) for n in (1, 2, 3, 4, 5, 8, 9, 64, 65)] == [0, 1, 2, 2, 3, 3, 4, 6, 7]
        with pytest.raises(PreconditionError):
            ceil_log2(0)

    def test_checked_power_overflow(self) -> None:
        """Test that powers leaving the 64-bit range are refused."""
        assert checked_power(3, 5) == 243
        with pytest.raises(LabelOverflowError):
            checked_power(10, 30)

    def test_primorial(self) -> None:
        """Test primorials used by the AP search."""
        assert primorial(1) == 1
        assert primorial(7) == 210
        assert primorial(13) == 30030


class TestFactorCounting:
    """Test count_prime_factors and the omega table."""

    def test_examples(self) -> None:
        """Test Omega with multiplicity."""
        assert count_prime_factors(2) == 1
        assert count_prime_factors(12) == 3
        assert count_prime_factors(2**10) == 10
        assert count_prime_factors(3 * 5 * 7 * 11) == 4

    def test_large_semiprime(self) -> None:
        """Test a semiprime beyond trial division."""
        assert count_prime_factors(1000003 * 1000033) == 2
        assert count_prime_factors(1000003**2 * 7) == 3

    def test_rejects_small_input(self) -> None:
        """Test that n <= 1 is a precondition error."""
        with pytest.raises(PreconditionError, match="n >= 2"):
            count_prime_factors(1)

    def test_omega_table_matches(self) -> None:
        """Test the sieve table against direct counting."""
        table = omega_table(500)
        for n in range(2, 501):
            assert table[n] == count_prime_factors(n), n

    def test_factor_count_bound(self) -> None:
        """Test that every integer below m has at most ceil(log2 m) - 1 prime factors."""
        for n in range(2, 5001):
            omega = count_prime_factors(n)
            assert omega == sum(_factorize(n).values()), n
            assert omega <= ceil_log2(n + 1) - 1, n
            assert omega <= ceil_log2(n), n

    @pytest.mark.slow
    def test_factor_count_bound_sweep(self) -> None:
        """Test the factor-count bound up to 2 * 10^5 through the sieve table."""
        limit = 2 * 10**5
        table = omega_table(limit)
        for n in range(2, limit + 1):
            assert table[n] <= ceil_log2(n + 1) - 1, n
        for n in range(2, limit + 1, 997):
            assert count_prime_factors(n) == table[n], n


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _check_against_factorization(n: int, max_exponent: int) -> None:
    factors = _factorize(n)
    if len(factors) != 1:
        assert classify_prime_power(n, max_exponent) is None, n
        assert strict_kth_power_base(n, max_exponent) is None, n
        return
    ((p, j),) = factors.items()
    for k in range(1, max_exponent + 1):
        expected = PrimePower(p, j) if j <= k else None
        assert classify_prime_power(n, k) == expected, (n, k)
        assert strict_kth_power_base(n, k) == (p if k == j else None), (n, k)


class TestPrimePowers:
    """Test prime-power classification."""

    def test_classify(self) -> None:
        """Test classification respects max_exponent."""
        assert classify_prime_power(7, 1) == PrimePower(7, 1)
        assert classify_prime_power(49, 2) == PrimePower(7, 2)
        assert classify_prime_power(49, 1) is None
        assert classify_prime_power(12, 5) is None
        assert classify_prime_power(2**20, 20) == PrimePower(2, 20)

    def test_classify_rejects_small_input(self) -> None:
        """Test the n >= 2 precondition."""
        with pytest.raises(PreconditionError):
            classify_prime_power(1, 3)

    def test_strict_base(self) -> None:
        """Test strict kth powers."""
        assert strict_kth_power_base(3485 - 3124, 2) == 19
        assert strict_kth_power_base(8, 3) == 2
        assert strict_kth_power_base(8, 2) is None
        assert strict_kth_power_base(7, 1) == 7

    def test_prime_power_value(self) -> None:
        """Test PrimePower validation and value."""
        assert PrimePower(5, 3).value == 125
        assert str(PrimePower(5, 3)) == "5^3"
        with pytest.raises(PreconditionError, match="not prime"):
            PrimePower(6, 2)

    def test_prime_powers_up_to(self) -> None:
        """Test prime power tables, inclusive and exact."""
        assert prime_powers_up_to(30, 1) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        assert prime_powers_up_to(30, 2, exact=True) == [4, 9, 25]
        assert prime_powers_up_to(16, 4) == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]

    def test_agrees_with_factorization(self) -> None:
        """Test classification against the trial-division factorization up to 3000."""
        for n in range(2, 3001):
            _check_against_factorization(n, 12)

    def test_word_sized_prime_powers(self) -> None:
        """Test prime powers and near misses close to the 64-bit limit."""
        for p in (2, 3, 1000003, 2**31 - 1):
            j = 1
            while p ** (j + 1) <= 2**63 - 1:
                j += 1
            assert classify_prime_power(p**j, 64) == PrimePower(p, j)
            assert strict_kth_power_base(p**j, j) == p
            assert classify_prime_power(p**j - 1, 64) is None

    @pytest.mark.slow
    def test_agrees_with_factorization_sweep(self) -> None:
        """Test classification against factorization up to 5 * 10^4."""
        for n in range(3001, 5 * 10**4):
            _check_against_factorization(n, 16)


class TestTwinPrimes:
    """Test twin prime enumeration."""

    def test_first_pairs(self) -> None:
        """Test the first few pairs."""
        pairs = twin_primes(4, 100)
        assert [(p.lower, p.upper) for p in pairs] == [(3, 5), (5, 7), (11, 13), (17, 19)]

    def test_budget_boundary(self) -> None:
        """Test that the tenth pair needs the sieve to reach 109."""
        assert twin_primes(10, 109)[-1] == TwinPair(107, 109)
        with pytest.raises(BudgetExhaustedError, match="Only 9 twin prime pairs") as excinfo:
            twin_primes(10, 108)
        assert excinfo.value.budget == 108
        assert excinfo.value.details["found"] == 9

    def test_rejects_zero_count(self) -> None:
        """Test the count precondition."""
        with pytest.raises(PreconditionError):
            twin_primes(0, 100)

    def test_twin_pair_validation(self) -> None:
        """Test TwinPair refuses non-twins."""
        with pytest.raises(PreconditionError):
            TwinPair(7, 9)


class TestPrimeAP:
    """Test prime arithmetic progressions."""

    def test_short_progressions(self) -> None:
        """Test the smallest progressions."""
        assert find_prime_ap(1, 10) == PrimeAP(3, 2, 1)
        assert find_prime_ap(3, 100) == PrimeAP(3, 2, 3)
        ap = find_prime_ap(7, 10**6)
        assert ap == PrimeAP(7, 150, 7)
        assert verify_prime_ap(ap)

    def test_length_thirteen(self) -> None:
        """Test the progression used by the 3-partite construction."""
        ap = find_prime_ap(13, 10**6)
        assert ap is not None
        assert (ap.first, ap.step) == (4943, 60060)
        assert ap.last == 725663
        assert all(is_prime(t) for t in ap.terms())

    def test_budget_exhaustion_returns_none(self) -> None:
        """Test that a tiny budget gives None instead of a wrong answer."""
        assert find_prime_ap(7, 1) is None

    def test_validation(self) -> None:
        """Test PrimeAP refuses composite terms and first term 2."""
        with pytest.raises(PreconditionError, match="composite"):
            PrimeAP(3, 6, 3)
        with pytest.raises(PreconditionError, match="exceed 2"):
            PrimeAP(2, 1, 2)

    def test_term_index(self) -> None:
        """Test term access bounds."""
        ap = PrimeAP(5, 6, 5)
        assert ap.terms() == [5, 11, 17, 23, 29]
        assert ap.term(4) == 29
        with pytest.raises(IndexError):
            ap.term(5)
