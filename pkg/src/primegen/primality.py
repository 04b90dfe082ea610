"""Probabilistic primality tests and an exact trial-division oracle.

Three single-round tests (Fermat, Euler, Miller-Rabin) over random
bases, multi-round drivers that stop at the first witness, and exact
trial division for small inputs. Composite verdicts always carry
evidence and are never wrong; only "probable prime" can be a false
positive.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from enum import Enum

from .arith import TwoAdicDecomposition, decompose_pow2, mod_pow
from .errors import RefusalError


class Outcome(Enum):
    COMPOSITE = "composite"
    PROBABLE_PRIME = "probable prime"


@dataclass(frozen=True)
class TestVerdict:
    """Outcome of one or more test rounds.

    Composite verdicts carry a witness base and/or a discovered factor.
    rounds_survived counts the rounds that reported "probable prime".
    """

    outcome: Outcome
    witness: int | None = None
    factor: int | None = None
    rounds_survived: int = 0

    def __post_init__(self) -> None:
        if self.outcome is Outcome.COMPOSITE and self.witness is None and self.factor is None:
            raise ValueError("composite verdicts need a witness or a factor")

    @property
    def is_composite(self) -> bool:
        return self.outcome is Outcome.COMPOSITE

    @property
    def is_probable_prime(self) -> bool:
        return self.outcome is Outcome.PROBABLE_PRIME


@dataclass(frozen=True)
class MRTranscript:
    """Audit trail of one Miller-Rabin round.

    chain[0] = a^m mod n and chain[i] = chain[i-1]^2 mod n, so
    chain[s] = a^(n-1) mod n where n - 1 = 2^s * m.
    """

    decomposition: TwoAdicDecomposition
    chain: tuple[int, ...]


def _check_round_args(n: int, a: int) -> None:
    if n < 5 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 5, got {n}")
    if not 2 <= a <= n - 2:
        raise ValueError(f"base must lie in [2, {n - 2}], got {a}")


def fermat_round(n: int, a: int) -> TestVerdict:
    """Probable prime iff a^(n-1) = 1 (mod n).

    A shared factor gcd(a, n) > 1 is reported as composite evidence
    directly; such bases can never satisfy the congruence anyway.
    """
    _check_round_args(n, a)
    g = math.gcd(a, n)
    if g > 1:
        return TestVerdict(Outcome.COMPOSITE, witness=a, factor=g)
    if mod_pow(a, n - 1, n) == 1:
        return TestVerdict(Outcome.PROBABLE_PRIME, rounds_survived=1)
    return TestVerdict(Outcome.COMPOSITE, witness=a)


def euler_round(n: int, a: int) -> TestVerdict:
    """Probable prime iff a^((n-1)/2) = +-1 (mod n).

    Strictly sharper than the Fermat round: the square of +-1 is 1, so
    every Euler liar is a Fermat liar.
    """
    _check_round_args(n, a)
    g = math.gcd(a, n)
    if g > 1:
        return TestVerdict(Outcome.COMPOSITE, witness=a, factor=g)
    if mod_pow(a, (n - 1) // 2, n) in (1, n - 1):
        return TestVerdict(Outcome.PROBABLE_PRIME, rounds_survived=1)
    return TestVerdict(Outcome.COMPOSITE, witness=a)


def miller_rabin_round(n: int, a: int) -> tuple[TestVerdict, MRTranscript]:
    """One strong-pseudoprime round, with its full squaring chain.

    With n - 1 = 2^s * m, the base passes iff a^m = 1 (mod n) or some
    chain entry before the last equals n - 1; odd primes always pass.
    """
    _check_round_args(n, a)
    dec = decompose_pow2(n - 1)
    chain = [mod_pow(a, dec.odd_part, n)]
    for _ in range(dec.s):
        chain.append(chain[-1] * chain[-1] % n)
    transcript = MRTranscript(decomposition=dec, chain=tuple(chain))
    passed = chain[0] in (1, n - 1) or any(chain[i] == n - 1 for i in range(1, dec.s))
    if passed:
        return TestVerdict(Outcome.PROBABLE_PRIME, rounds_survived=1), transcript
    g = math.gcd(a, n)
    factor = g if g > 1 else None
    return TestVerdict(Outcome.COMPOSITE, witness=a, factor=factor), transcript


def _multi_round(round_fn, n: int, rounds: int, rng: random.Random | None) -> TestVerdict:
    if n < 5 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 5, got {n}")
    if rounds < 1:
        raise ValueError("round count must be >= 1")
    if rng is None:
        rng = random.SystemRandom()
    for done in range(rounds):
        a = rng.randint(2, n - 2)
        verdict = round_fn(n, a)
        if verdict.is_composite:
            return replace(verdict, rounds_survived=done)
    return TestVerdict(Outcome.PROBABLE_PRIME, rounds_survived=rounds)


def miller_rabin(n: int, rounds: int, rng: random.Random | None = None) -> TestVerdict:
    """Up to `rounds` strong rounds with independent uniform bases in [2, n-2].

    Stops at the first witness. A surviving composite slips through with
    probability below 4^-rounds.
    """
    return _multi_round(lambda n_, a: miller_rabin_round(n_, a)[0], n, rounds, rng)


def fermat_test(n: int, rounds: int, rng: random.Random | None = None) -> TestVerdict:
    """Multi-round Fermat test; unreliable against Carmichael numbers."""
    return _multi_round(fermat_round, n, rounds, rng)


def euler_test(n: int, rounds: int, rng: random.Random | None = None) -> TestVerdict:
    """Multi-round Euler test."""
    return _multi_round(euler_round, n, rounds, rng)


class ExactOutcome(Enum):
    PRIME = "prime"
    COMPOSITE = "composite"
    UNIT = "unit"


@dataclass(frozen=True)
class ExactVerdict:
    outcome: ExactOutcome
    smallest_factor: int | None = None

    @property
    def is_prime(self) -> bool:
        return self.outcome is ExactOutcome.PRIME


ORACLE_BOUND = 10**12


def trial_division(n: int, bound: int = ORACLE_BOUND) -> ExactVerdict:
    """Exact primality by dividing by 2, 3, then 6k+-1 up to sqrt(n).

    Refuses inputs above `bound` rather than running unboundedly long.
    Composite verdicts carry the smallest prime factor; 1 is a unit.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > bound:
        raise RefusalError(f"{n} exceeds the exact-oracle bound {bound}")
    if n == 1:
        return ExactVerdict(ExactOutcome.UNIT)
    if n in (2, 3):
        return ExactVerdict(ExactOutcome.PRIME)
    if n % 2 == 0:
        return ExactVerdict(ExactOutcome.COMPOSITE, smallest_factor=2)
    if n % 3 == 0:
        return ExactVerdict(ExactOutcome.COMPOSITE, smallest_factor=3)
    f = 5
    while f * f <= n:
        if n % f == 0:
            return ExactVerdict(ExactOutcome.COMPOSITE, smallest_factor=f)
        if n % (f + 2) == 0:
            return ExactVerdict(ExactOutcome.COMPOSITE, smallest_factor=f + 2)
        f += 6
    return ExactVerdict(ExactOutcome.PRIME)
