"""
Number-theoretic kernel.

Primality, prime-factor counting, prime-power classification, and bounded
enumeration of twin primes and prime arithmetic progressions. Every value is
kept inside the signed 64-bit range; leaving it raises LabelOverflowError.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from pdl.errors import BudgetExhaustedError, LabelOverflowError, PreconditionError

logger = logging.getLogger(__name__)

WORD_MAX = 2**63 - 1

# Miller-Rabin witnesses that are deterministic for every n < 2**64
_WORD_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)
_TRIAL_LIMIT = 1000


def check_word(value: int, what: str = "value") -> int:
    """Return value unchanged, or raise LabelOverflowError outside the 64-bit range."""
    if abs(value) > WORD_MAX:
        raise LabelOverflowError(f"{what} {value} exceeds the signed 64-bit range")
    return value


def checked_power(base: int, exponent: int) -> int:
    """Compute base**exponent, refusing results outside the 64-bit range."""
    if exponent < 0:
        raise PreconditionError(f"Exponent must be non-negative, got {exponent}")
    if abs(base) > 1 and exponent * math.log2(abs(base)) > 64:
        raise LabelOverflowError(f"{base}^{exponent} exceeds the signed 64-bit range")
    return check_word(base**exponent, f"{base}^{exponent}")


def integer_root(n: int, k: int) -> int:
    """Largest r >= 0 with r**k <= n."""
    if n < 0:
        raise PreconditionError(f"integer_root needs n >= 0, got {n}")
    if k < 1:
        raise PreconditionError(f"integer_root needs k >= 1, got {k}")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    r = int(round(n ** (1.0 / k)))
    while r > 0 and r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def ceil_log2(n: int) -> int:
    """Return ceil(log2(n)) for n >= 1."""
    if n < 1:
        raise PreconditionError(f"ceil_log2 needs n >= 1, got {n}")
    return (n - 1).bit_length()


def _is_composite_witness(n: int, s: int, d: int, a: int) -> bool:
    a %= n
    if a == 0:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(1, s):
        x = x * x % n
        if x == n - 1:
            return False
        if x == 1:
            return True
    return True


def is_prime(n: int) -> bool:
    """
    Deterministic primality test.

    Trial division by small primes, then Miller-Rabin with a witness set that
    is exact for every n < 2**64.

    Args:
        n: Integer to test. Values below 2 are never prime.

    Returns:
        True iff n is prime.

    Raises:
        LabelOverflowError: If n >= 2**64, where the witness set is not proven.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n >= 2**64:
        raise LabelOverflowError(f"Primality of {n} is outside the deterministic 64-bit range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return not any(_is_composite_witness(n, s, d, a) for a in _WORD_WITNESSES)


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    candidate = max(2, n + 1)
    while not is_prime(candidate):
        candidate += 1
    return check_word(candidate, "prime")


def smallest_prime_power_above(bound: int, k: int, min_prime: int = 2) -> tuple[int, int]:
    """
    Smallest prime p >= min_prime with p**k > bound.

    Returns:
        The pair (p, p**k).
    """
    if k < 1:
        raise PreconditionError(f"Exponent k must be >= 1, got {k}")
    start = max(min_prime, integer_root(max(bound, 0), k) + 1, 2)
    p = start if is_prime(start) else next_prime(start)
    power = checked_power(p, k)
    while power <= bound:
        p = next_prime(p)
        power = checked_power(p, k)
    return p, power


def _pollard_rho(n: int) -> int:
    """Return a non-trivial factor of the odd composite n (Brent's cycle finding)."""
    for c in range(1, 64):
        x = y = 2
        g = 1
        while g == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            g = math.gcd(abs(x - y), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed to split {n}")


def _omega_large(n: int) -> int:
    if n == 1:
        return 0
    if is_prime(n):
        return 1
    root = math.isqrt(n)
    if root * root == n:
        return 2 * _omega_large(root)
    factor = _pollard_rho(n)
    return _omega_large(factor) + _omega_large(n // factor)


def count_prime_factors(n: int) -> int:
    """
    Return Omega(n), the number of prime factors of n with multiplicity.

    Args:
        n: Integer >= 2.

    Raises:
        PreconditionError: If n <= 1.
    """
    if n <= 1:
        raise PreconditionError(f"count_prime_factors needs n >= 2, got {n}")
    count = 0
    p = 2
    while p <= _TRIAL_LIMIT and p * p <= n:
        while n % p == 0:
            n //= p
            count += 1
        p += 1 if p == 2 else 2
    if n == 1:
        return count
    if n < _TRIAL_LIMIT * _TRIAL_LIMIT:
        return count + 1
    return count + _omega_large(n)


@dataclass(frozen=True)
class PrimePower:
    """A value base**exponent with a prime base."""

    base: int
    """The prime p."""

    exponent: int
    """The exponent j >= 1."""

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise PreconditionError(f"Exponent must be >= 1, got {self.exponent}")
        if not is_prime(self.base):
            raise PreconditionError(f"Base {self.base} is not prime")
        checked_power(self.base, self.exponent)

    @property
    def value(self) -> int:
        return self.base**self.exponent

    def __str__(self) -> str:
        return f"{self.base}^{self.exponent}" if self.exponent > 1 else str(self.base)


def classify_prime_power(n: int, max_exponent: int) -> PrimePower | None:
    """
    Write n as p**j with p prime and 1 <= j <= max_exponent, if possible.

    Args:
        n: Integer >= 2.
        max_exponent: Largest exponent allowed.

    Returns:
        The unique PrimePower equal to n, or None.

    Raises:
        PreconditionError: If n <= 1 or max_exponent < 1.
    """
    if n <= 1:
        raise PreconditionError(f"classify_prime_power needs n >= 2, got {n}")
    if max_exponent < 1:
        raise PreconditionError(f"max_exponent must be >= 1, got {max_exponent}")
    for j in range(1, min(max_exponent, n.bit_length()) + 1):
        root = integer_root(n, j)
        if root >= 2 and root**j == n and is_prime(root):
            return PrimePower(root, j)
    return None


def strict_kth_power_base(n: int, k: int) -> int | None:
    """Return p if n == p**k for a prime p, else None."""
    if n <= 1:
        raise PreconditionError(f"strict_kth_power_base needs n >= 2, got {n}")
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    root = integer_root(n, k)
    if root**k == n and is_prime(root):
        return root
    return None


def prime_flags(limit: int) -> np.ndarray:
    """Boolean array where flags[i] is True iff i is prime, for 0 <= i <= limit."""
    flags = np.ones(max(limit, 1) + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags[: limit + 1] if limit >= 0 else flags[:0]


def primes_up_to(limit: int) -> np.ndarray:
    """Array of all primes <= limit."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    return np.nonzero(prime_flags(limit))[0].astype(np.int64)


def omega_table(limit: int) -> np.ndarray:
    """
    Omega(n) for every 0 <= n <= limit.

    Entries 0 and 1 are 0. Built by adding one for every prime power dividing n.
    """
    omega = np.zeros(limit + 1, dtype=np.int64)
    for p in primes_up_to(limit):
        power = int(p)
        while power <= limit:
            omega[power::power] += 1
            power *= int(p)
    return omega


def prime_powers_up_to(limit: int, max_exponent: int, exact: bool = False) -> list[int]:
    """
    Sorted list of p**j <= limit for primes p.

    Args:
        limit: Inclusive upper bound.
        max_exponent: Largest exponent j.
        exact: Only include j == max_exponent.
    """
    values: list[int] = []
    if limit < 2:
        return values
    lowest = max_exponent if exact else 1
    for j in range(lowest, max_exponent + 1):
        root = integer_root(limit, j)
        if root < 2:
            break
        values.extend(int(p) ** j for p in primes_up_to(root))
    return sorted(values)


def primorial(limit: int) -> int:
    """Product of all primes <= limit (1 when there are none)."""
    return math.prod(int(p) for p in primes_up_to(limit))


@dataclass(frozen=True)
class TwinPair:
    """A pair of primes (lower, lower + 2)."""

    lower: int
    upper: int

    def __post_init__(self) -> None:
        if self.upper != self.lower + 2:
            raise PreconditionError(f"Twin pair needs upper = lower + 2, got {self}")
        if not (is_prime(self.lower) and is_prime(self.upper)):
            raise PreconditionError(f"Twin pair members must be prime, got {self}")


def twin_primes(count: int, budget: int) -> list[TwinPair]:
    """
    First `count` twin prime pairs by increasing lower member.

    Args:
        count: Number of pairs wanted.
        budget: Sieve bound; both members must be <= budget.

    Raises:
        PreconditionError: If count < 1 or budget < 1.
        BudgetExhaustedError: If the sieve bound holds fewer than count pairs.
    """
    if count < 1:
        raise PreconditionError(f"Twin prime count must be >= 1, got {count}")
    if budget < 1:
        raise PreconditionError(f"Sieve budget must be >= 1, got {budget}")
    flags = prime_flags(budget)
    lowers = np.nonzero(flags[:-2] & flags[2:])[0] if budget >= 2 else np.zeros(0, dtype=int)
    logger.debug("Twin prime sieve to %d found %d pairs", budget, len(lowers))
    if len(lowers) < count:
        raise BudgetExhaustedError(
            f"Only {len(lowers)} twin prime pairs below {budget}; {count} requested",
            budget,
            found=len(lowers),
        )
    return [TwinPair(int(p), int(p) + 2) for p in lowers[:count]]


@dataclass(frozen=True)
class PrimeAP:
    """An arithmetic progression first, first + step, ... of `length` primes."""

    first: int
    """First term, an odd prime."""

    step: int
    """Common difference."""

    length: int
    """Number of terms."""

    def __post_init__(self) -> None:
        if self.length < 1:
            raise PreconditionError(f"AP length must be >= 1, got {self.length}")
        if self.step < 1:
            raise PreconditionError(f"AP step must be >= 1, got {self.step}")
        if self.first <= 2:
            raise PreconditionError(f"AP first term must exceed 2, got {self.first}")
        check_word(self.last, "AP term")
        bad = [t for t in self.terms() if not is_prime(t)]
        if bad:
            raise PreconditionError(f"AP ({self.first}, {self.step}) has composite term {bad[0]}")

    @property
    def last(self) -> int:
        return self.first + (self.length - 1) * self.step

    def terms(self) -> list[int]:
        return [self.first + i * self.step for i in range(self.length)]

    def term(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise IndexError(f"AP index {index} outside 0..{self.length - 1}")
        return self.first + index * self.step


def verify_prime_ap(ap: PrimeAP) -> bool:
    """Re-check an AP term by term."""
    return ap.first > 2 and all(is_prime(t) for t in ap.terms())


def _ap_steps_for_last(last: int, length: int, full: int, odd_small: list[int]):
    """Yield (first, step) candidates ending at `last`, smallest first term first."""
    span = length - 1
    candidates = []
    m = 1
    while m * full * span < last - 2:
        candidates.append((last - m * full * span, m * full))
        m += 1
    for q in odd_small:
        unit = (full // q) * span
        if last > q and (last - q) % unit == 0:
            candidates.append((q, (last - q) // span))
    candidates.sort()
    return candidates


def find_prime_ap(length: int, budget: int, sieve_limit: int = 10**6) -> PrimeAP | None:
    """
    Find a prime arithmetic progression of the given length with first term > 2.

    Candidates are enumerated by increasing last term. The step of a progression
    whose first term exceeds `length` is a multiple of the primorial of the primes
    <= length; when the first term is a prime q <= length, the step is a multiple
    of that primorial divided by q. Each candidate tested costs one budget unit.

    Args:
        length: Number of terms.
        budget: Maximum number of candidates to test.
        sieve_limit: Largest last term considered.

    Returns:
        A verified PrimeAP, or None when the budget or the sieve runs out.
    """
    if length < 1:
        raise PreconditionError(f"AP length must be >= 1, got {length}")
    if length == 1:
        return PrimeAP(3, 2, 1)
    flags = prime_flags(sieve_limit)
    full = primorial(length)
    odd_small = [int(q) for q in primes_up_to(length) if q > 2]
    spent = 0
    for last in np.nonzero(flags)[0]:
        last = int(last)
        for first, step in _ap_steps_for_last(last, length, full, odd_small):
            spent += 1
            if spent > budget:
                logger.info("AP-%d search stopped after %d candidates", length, budget)
                return None
            if all(flags[first + i * step] for i in range(length)):
                ap = PrimeAP(first, step, length)
                logger.debug("AP-%d found: first=%d step=%d", length, first, step)
                return ap
    logger.info("AP-%d search exhausted the sieve up to %d", length, sieve_limit)
    return None
