"""Nonnegative reals stored as natural logarithms.

The bounds in this package reach 10^700 and beyond, far past the range of a
binary64 float, so they are carried as ``ln(x)`` and only rendered at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

LN10 = math.log(10.0)


@total_ordering
@dataclass(frozen=True)
class LogMagnitude:
    ln_value: float = 0.0
    is_zero: bool = False

    @classmethod
    def zero(cls) -> "LogMagnitude":
        return cls(0.0, True)

    @classmethod
    def one(cls) -> "LogMagnitude":
        return cls(0.0)

    @classmethod
    def from_ln(cls, ln_value: float) -> "LogMagnitude":
        return cls(float(ln_value))

    @classmethod
    def of(cls, x: float | int | Fraction) -> "LogMagnitude":
        """Wrap an ordinary nonnegative number (ints and Fractions of any size)."""
        if x < 0:
            raise ValueError("LogMagnitude holds nonnegative values only")
        if x == 0:
            return cls.zero()
        if isinstance(x, Fraction):
            return cls(math.log(x.numerator) - math.log(x.denominator))
        return cls(math.log(x))

    @classmethod
    def power(cls, base: float | int | Fraction, exponent: float | Fraction) -> "LogMagnitude":
        """``base ** exponent`` with 0**0 taken as 1."""
        exponent = float(exponent)
        if base == 0:
            return cls.one() if exponent == 0 else cls.zero()
        return cls(cls.of(base).ln_value * exponent)

    # -- arithmetic --

    def __mul__(self, other: "LogMagnitude") -> "LogMagnitude":
        if self.is_zero or other.is_zero:
            return LogMagnitude.zero()
        return LogMagnitude(self.ln_value + other.ln_value)

    def __truediv__(self, other: "LogMagnitude") -> "LogMagnitude":
        if other.is_zero:
            raise ZeroDivisionError("division by a zero LogMagnitude")
        if self.is_zero:
            return self
        return LogMagnitude(self.ln_value - other.ln_value)

    def __pow__(self, p: float) -> "LogMagnitude":
        if self.is_zero:
            return LogMagnitude.one() if p == 0 else self
        return LogMagnitude(self.ln_value * float(p))

    def __lt__(self, other: "LogMagnitude") -> bool:
        if self.is_zero:
            return not other.is_zero
        if other.is_zero:
            return False
        return self.ln_value < other.ln_value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogMagnitude):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero == other.is_zero
        return self.ln_value == other.ln_value

    def __hash__(self) -> int:
        return hash((self.is_zero, 0.0 if self.is_zero else self.ln_value))

    # -- rendering --

    @property
    def log10(self) -> float:
        return -math.inf if self.is_zero else self.ln_value / LN10

    def sci(self) -> tuple[float, int]:
        """Mantissa in [1, 10) and decimal exponent.  Zero renders as (0.0, 0)."""
        if self.is_zero:
            return 0.0, 0
        l10 = self.log10
        e = math.floor(l10)
        m = 10.0 ** (l10 - e)
        if m >= 10.0:
            m, e = m / 10.0, e + 1
        return m, e

    def to_float(self) -> float:
        """Linear value; ``inf`` when it does not fit in a float."""
        if self.is_zero:
            return 0.0
        try:
            return math.exp(self.ln_value)
        except OverflowError:
            return math.inf

    def format(self, digits: int = 5) -> str:
        m, e = self.sci()
        # rounding can push 9.99996 up to 10.000
        txt = f"{m:.{digits - 1}f}"
        if float(txt) >= 10.0:
            m, e = m / 10.0, e + 1
            txt = f"{m:.{digits - 1}f}"
        return f"{txt}e{e}"

    def __repr__(self) -> str:
        return "LogMagnitude(0)" if self.is_zero else f"LogMagnitude({self.format(8)})"

