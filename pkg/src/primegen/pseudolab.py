"""Brute-force enumeration lab for pseudoprimes, liars and witnesses.

Everything here is desk-scale by design: sweeps are capped and refuse
to run past their caps instead of silently taking hours. Each n is
classified independently, so sweeps parallelize trivially.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import decompose_pow2, extended_gcd
from .errors import RefusalError
from .primality import ExactOutcome, trial_division

FERMAT_SCAN_CAP = 10**7
CARMICHAEL_CAP = 10**6
CENSUS_CAP = 10**6
ABSOLUTE_EULER_CAP = 10**6
SQRT_UNITY_CAP = 10**9
SQRT_UNITY_SCAN_CAP = 10**6


@dataclass(frozen=True)
class LiarCensus:
    """Exhaustive classification of all bases 1..n-1 for an odd composite n.

    Liar counts are nested (strong <= euler <= fermat); bases sharing a
    factor with n can satisfy none of the congruences and count as
    non-liars, but stay in total_bases so liar fractions are over the
    full range 1..n-1.
    """

    n: int
    total_bases: int
    fermat_liars: int
    euler_liars: int
    strong_liars: int


def _prime_flags(limit: int) -> bytearray:
    """Sieve of Eratosthenes: flags[i] == 1 iff i is prime."""
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return flags


def _smallest_factor_table(limit: int) -> list[int]:
    """spf[i] = smallest prime factor of i (spf[i] == i iff i prime)."""
    spf = list(range(limit + 1))
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def liar_flags(n: int, a: int) -> tuple[bool, bool, bool]:
    """(fermat, euler, strong) liar flags for base a against odd n >= 3.

    One squaring chain serves all three tests: with n - 1 = 2^s * m,
    the Fermat condition reads off chain[s], the Euler condition off
    chain[s-1], and the strong condition off chain[0] and any -1 among
    chain[0..s-1].
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    if not 1 <= a <= n - 1:
        raise ValueError("base must lie in [1, n-1]")
    dec = decompose_pow2(n - 1)
    minus_one = n - 1
    x = pow(a, dec.odd_part, n)
    strong = x == 1
    euler = False
    for i in range(dec.s):
        if x == minus_one:
            strong = True
        if i == dec.s - 1:
            euler = x in (1, minus_one)
        x = x * x % n
    return x == 1, euler, strong


def liar_census(n: int) -> LiarCensus:
    """Classify every base in [1, n-1] under all three round tests."""
    if n > CENSUS_CAP:
        raise RefusalError(f"census capped at {CENSUS_CAP}, got {n}")
    if n % 2 == 0 or trial_division(n).outcome is not ExactOutcome.COMPOSITE:
        raise ValueError(f"census needs an odd composite, got {n}")
    fermat = euler = strong = 0
    for a in range(1, n):
        f, e, s = liar_flags(n, a)
        fermat += f
        euler += e
        strong += s
    return LiarCensus(n=n, total_bases=n - 1, fermat_liars=fermat, euler_liars=euler, strong_liars=strong)


def fermat_pseudoprimes(a: int, limit: int) -> list[int]:
    """Odd composite n <= limit, coprime to a, with a^(n-1) = 1 (mod n)."""
    if a < 2:
        raise ValueError("base must be >= 2")
    if limit > FERMAT_SCAN_CAP:
        raise RefusalError(f"scan capped at {FERMAT_SCAN_CAP}, got {limit}")
    if limit < 9:
        return []
    flags = _prime_flags(limit)
    found = []
    for n in range(9, limit + 1, 2):
        if flags[n] or math.gcd(a, n) != 1:
            continue
        if pow(a, n - 1, n) == 1:
            found.append(n)
    return found


def carmichael_numbers(limit: int) -> list[int]:
    """Composites that are Fermat pseudoprimes to every coprime base.

    Korselt's criterion (squarefree, and p-1 divides n-1 for every prime
    factor p) characterizes them; base n-1 rules out every even
    composite, so only odd n are scanned.
    """
    if limit > CARMICHAEL_CAP:
        raise RefusalError(f"scan capped at {CARMICHAEL_CAP}, got {limit}")
    if limit < 9:
        return []
    spf = _smallest_factor_table(limit)
    found = []
    for n in range(9, limit + 1, 2):
        if spf[n] == n:
            continue
        m = n
        squarefree = True
        korselt = True
        while m > 1:
            p = spf[m]
            m //= p
            if m % p == 0:
                squarefree = False
                break
            if (n - 1) % (p - 1):
                korselt = False
                break
        if squarefree and korselt:
            found.append(n)
    return found


def is_absolute_euler_pseudoprime(n: int) -> bool:
    """True iff a^((n-1)/2) = +-1 (mod n) for every base coprime to n."""
    if n > ABSOLUTE_EULER_CAP:
        raise RefusalError(f"check capped at {ABSOLUTE_EULER_CAP}, got {n}")
    if n % 2 == 0 or trial_division(n).outcome is not ExactOutcome.COMPOSITE:
        raise ValueError(f"check needs an odd composite, got {n}")
    half = (n - 1) // 2
    for a in range(2, n - 1):
        if math.gcd(a, n) == 1 and pow(a, half, n) not in (1, n - 1):
            return False
    return True


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    # moduli are coprime prime powers here
    _, s, _ = extended_gcd(m1, m2)
    return (r1 + (r2 - r1) * s % m2 * m1) % (m1 * m2)


def _unity_roots_prime_power(p: int, e: int) -> list[int]:
    q = p**e
    if p != 2:
        return [1, q - 1]
    if e == 1:
        return [1]
    if e == 2:
        return [1, 3]
    half = q // 2
    return [1, half - 1, half + 1, q - 1]


def sqrt_of_unity(n: int) -> list[int]:
    """All x in [1, n-1] with x^2 = 1 (mod n), ascending.

    Direct scan up to 10^6; above that, factorization plus the Chinese
    remainder theorem (each prime power contributes its own roots, and
    a product of r odd prime powers yields 2^r of them).
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    if n > SQRT_UNITY_CAP:
        raise RefusalError(f"capped at {SQRT_UNITY_CAP}, got {n}")
    if n <= SQRT_UNITY_SCAN_CAP:
        return [x for x in range(1, n) if x * x % n == 1]
    roots = [0]
    modulus = 1
    for p, e in _factorize(n).items():
        q = p**e
        roots = [_crt_pair(r, modulus, pr, q) for r in roots for pr in _unity_roots_prime_power(p, e)]
        modulus *= q
    return sorted(roots)
