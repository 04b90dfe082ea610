import math
from functools import lru_cache

import pytest
from hypothesis import settings

settings.register_profile("suite", derandomize=True, max_examples=200)
settings.load_profile("suite")


@lru_cache(maxsize=4)
def _prime_flags(limit: int) -> bytes:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            start = i * i
            flags[start :: i] = bytearray((limit - start) // i + 1)
    return bytes(flags)


@pytest.fixture(scope="session")
def prime_flags():
    """Independent sieve oracle: prime_flags(limit)[n] == 1 iff n is prime."""
    return _prime_flags


@pytest.fixture(scope="session")
def pi_exact():
    """Exact prime-counting oracle pi(x) from the sieve."""

    def count(x: int) -> int:
        flags = _prime_flags(x)
        return sum(flags)

    return count
