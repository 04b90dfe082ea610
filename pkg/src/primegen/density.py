"""Prime-density estimation for d-digit integers.

Prime-number-theorem approximations to pi(x), the d-digit prime count,
Dusart's explicit pi(x) bounds, and the prior probability that a
filtered candidate is prime.

Two modes govern the digital-root filter's density factor. Removing the
roots 3, 6 and 9 shrinks the pool by one third, so the exact density
gain is 3/2 (``corrected``, the default). A widely circulated shortcut
multiplies by 3 instead; ``published`` mode reproduces the reference
constants that follow from that factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .sampling import FilterPolicy
from .scireal import SciReal

LN10 = math.log(10.0)

DUSART_MIN = 60184

LAST_DIGIT_FACTOR = 2.5


class Mode(str, Enum):
    PUBLISHED = "published"
    CORRECTED = "corrected"


def pnt_estimate(x: "int | float | SciReal") -> SciReal:
    """x / ln x, the prime-number-theorem approximation to pi(x)."""
    value = SciReal.from_number(x)
    if value < 2:
        raise ValueError("x must be >= 2")
    return value / SciReal.from_number(value.ln())


def digit_prime_count(k: int) -> SciReal:
    """Approximate count of k-digit primes: 10^(k-1) (9k-10) / (ln 10 k(k-1)).

    Algebraically equal to pnt_estimate(10^k) - pnt_estimate(10^(k-1)).
    """
    if k < 2:
        raise ValueError("digit count must be >= 2")
    mantissa = (9 * k - 10) / (LN10 * k * (k - 1))
    return SciReal(mantissa, k - 1)


def dusart_bounds(x: "int | float | SciReal") -> tuple[SciReal, SciReal]:
    """Explicit bracket x/(ln x - 1) < pi(x) < x/(ln x - 1.1), valid for x >= 60184."""
    value = SciReal.from_number(x)
    if value < DUSART_MIN:
        raise ValueError(f"bounds require x >= {DUSART_MIN}")
    ln_x = value.ln()
    return value / (ln_x - 1.0), value / (ln_x - 1.1)


def digit_prime_count_bounds(k: int) -> tuple[SciReal, SciReal]:
    """Rigorous bracket on the k-digit prime count from the pi(x) bounds.

    Cross differences: lower(10^k) - upper(10^(k-1)) below, and
    upper(10^k) - lower(10^(k-1)) above. Needs 10^(k-1) >= 60184, so
    k >= 6.
    """
    if k < 6:
        raise ValueError("digit count must be >= 6 for a valid bracket")
    top_low, top_up = dusart_bounds(SciReal(0.1, k + 1))
    bot_low, bot_up = dusart_bounds(SciReal(0.1, k))
    return top_low - bot_up, top_up - bot_low


def base_prime_prob(k: int) -> float:
    """Probability an unrestricted k-digit draw is prime: (9k-10)/(9k(k-1) ln 10)."""
    if k < 2:
        raise ValueError("digit count must be >= 2")
    return (9 * k - 10) / (9 * k * (k - 1) * LN10)


def digital_root_factor(mode: Mode) -> float:
    return 3.0 if mode is Mode.PUBLISHED else 1.5


def filter_factor(policy: FilterPolicy, mode: Mode = Mode.CORRECTED) -> float:
    """Density gain from the active filters."""
    factor = 1.0
    if policy.last_digit_filter:
        factor *= LAST_DIGIT_FACTOR
    if policy.digital_root_filter:
        factor *= digital_root_factor(mode)
    return factor


def filtered_prime_prob(k: int, policy: FilterPolicy, mode: Mode = Mode.CORRECTED) -> float:
    """Prior probability that a filtered k-digit candidate is prime.

    base_prime_prob scaled by the filter factor. For very small k the
    published-mode product can exceed 1, where the underlying
    approximation is meaningless; the value is returned as computed.
    """
    return base_prime_prob(k) * filter_factor(policy, mode)


@dataclass(frozen=True)
class DensityEstimate:
    digits: int
    n_of_k: SciReal
    base_prob: float
    filtered_prob: float
    mode: Mode

    def __post_init__(self) -> None:
        if not 0 < self.base_prob <= self.filtered_prob:
            raise ValueError("probabilities out of order")


def density_estimate(k: int, policy: FilterPolicy, mode: Mode = Mode.CORRECTED) -> DensityEstimate:
    return DensityEstimate(
        digits=k,
        n_of_k=digit_prime_count(k),
        base_prob=base_prime_prob(k),
        filtered_prob=filtered_prime_prob(k, policy, mode),
        mode=mode,
    )
