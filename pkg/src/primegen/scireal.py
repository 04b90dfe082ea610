"""Decimal scientific reals: mantissa * 10**exp10.

Counts like the number of 75-digit primes (~1e72) overflow nothing here
because the decade lives in an int exponent and only the mantissa is a
float. Arithmetic keeps at least float precision (~15 significant
digits). Instances are normalized on construction so that
0.1 <= |mantissa| < 1, or mantissa == 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Number = "int | float | SciReal"


@dataclass(frozen=True)
class SciReal:
    mantissa: float
    exp10: int

    def __post_init__(self) -> None:
        m = float(self.mantissa)
        e = int(self.exp10)
        if not math.isfinite(m):
            raise ValueError(f"mantissa must be finite, got {m}")
        if m == 0.0:
            m, e = 0.0, 0
        else:
            shift = math.floor(math.log10(abs(m))) + 1
            if shift:
                m /= 10.0 ** shift
                e += shift
            while abs(m) >= 1.0:
                m /= 10.0
                e += 1
            while abs(m) < 0.1:
                m *= 10.0
                e -= 1
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exp10", e)

    @classmethod
    def from_number(cls, x: "int | float | SciReal") -> "SciReal":
        if isinstance(x, SciReal):
            return x
        if isinstance(x, int):
            return cls.from_int(x)
        return cls(float(x), 0)

    @classmethod
    def from_int(cls, n: int) -> "SciReal":
        """Exact-decade conversion; works for ints far beyond float range."""
        if n == 0:
            return cls(0.0, 0)
        digits = str(abs(n))
        lead = digits[:17]
        m = int(lead) / 10.0 ** len(lead)
        if n < 0:
            m = -m
        return cls(m, len(digits))

    def to_float(self) -> float:
        if self.exp10 > 308:
            raise OverflowError(f"value ~1e{self.exp10} exceeds float range")
        return self.mantissa * 10.0 ** self.exp10

    def mantissa_at(self, exp10: int) -> float:
        """Mantissa when the value is expressed as m * 10**exp10."""
        shift = self.exp10 - exp10
        if abs(shift) > 308:
            raise OverflowError("requested exponent too far from the value")
        return self.mantissa * 10.0 ** shift

    def ln(self) -> float:
        """Natural log of the value (value must be positive)."""
        if self.mantissa <= 0:
            raise ValueError("ln requires a positive value")
        return math.log(self.mantissa) + self.exp10 * _LN10

    def __mul__(self, other: "int | float | SciReal") -> "SciReal":
        o = SciReal.from_number(other)
        return SciReal(self.mantissa * o.mantissa, self.exp10 + o.exp10)

    __rmul__ = __mul__

    def __truediv__(self, other: "int | float | SciReal") -> "SciReal":
        o = SciReal.from_number(other)
        if o.mantissa == 0:
            raise ZeroDivisionError("division by zero SciReal")
        return SciReal(self.mantissa / o.mantissa, self.exp10 - o.exp10)

    def __add__(self, other: "int | float | SciReal") -> "SciReal":
        o = SciReal.from_number(other)
        if self.mantissa == 0:
            return o
        if o.mantissa == 0:
            return self
        pivot = max(self.exp10, o.exp10)
        m = self.mantissa * 10.0 ** (self.exp10 - pivot)
        m += o.mantissa * 10.0 ** (o.exp10 - pivot)
        return SciReal(m, pivot)

    __radd__ = __add__

    def __sub__(self, other: "int | float | SciReal") -> "SciReal":
        return self + (-SciReal.from_number(other))

    def __neg__(self) -> "SciReal":
        return SciReal(-self.mantissa, self.exp10)

    def __lt__(self, other: "int | float | SciReal") -> bool:
        diff = self - SciReal.from_number(other)
        return diff.mantissa < 0

    def __le__(self, other: "int | float | SciReal") -> bool:
        diff = self - SciReal.from_number(other)
        return diff.mantissa <= 0

    def __gt__(self, other: "int | float | SciReal") -> bool:
        return not self <= other

    def __ge__(self, other: "int | float | SciReal") -> bool:
        return not self < other

    def __str__(self) -> str:
        return f"{self.mantissa:.9f}e{self.exp10:+d}"


_LN10 = math.log(10.0)
