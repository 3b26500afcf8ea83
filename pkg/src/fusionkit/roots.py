"""Exact roots of unity, stored as a rational exponent modulo 1.

``RootOfUnity(Fraction(1, 8))`` is exp(2*pi*i/8).  Multiplication adds
exponents, so every identity between braiding scalars can be checked with
plain rational arithmetic.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=True)
class RootOfUnity:
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", Fraction(self.exponent) % 1)

    @classmethod
    def of_order(cls, n: int, k: int = 1) -> "RootOfUnity":
        """exp(2*pi*i*k/n)."""
        if n <= 0:
            raise ValueError("n must be positive")
        return cls(Fraction(k, n))

    @classmethod
    def parse(cls, text: str) -> "RootOfUnity":
        """Parse an exponent string such as ``"1/8"`` or ``"0"``."""
        return cls(Fraction(text.strip()))

    @property
    def order(self) -> int:
        return self.exponent.denominator

    def is_one(self) -> bool:
        return self.exponent == 0

    def __mul__(self, other):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return RootOfUnity(self.exponent + other.exponent)

    def __truediv__(self, other):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return RootOfUnity(self.exponent - other.exponent)

    def __pow__(self, k: int):
        return RootOfUnity(self.exponent * int(k))

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.exponent)

    def to_complex(self) -> complex:
        return cmath.exp(2j * cmath.pi * float(self.exponent))

    def __str__(self):
        e = self.exponent
        return f"{e.numerator}/{e.denominator}"

    def __repr__(self):
        return f"RootOfUnity({self})"


ONE = RootOfUnity(Fraction(0))
MINUS_ONE = RootOfUnity(Fraction(1, 2))
I = RootOfUnity(Fraction(1, 4))
MINUS_I = RootOfUnity(Fraction(3, 4))


_NAMED = {"1": ONE, "-1": MINUS_ONE, "i": I, "-i": MINUS_I}


def parse_root(text: str) -> RootOfUnity:
    """Read a scalar: one of 1, -1, i, -i, or an exponent p/q meaning exp(2 pi i p/q).

    Named values win, so "-1" is the scalar -1 (exponent 1/2), not exponent -1.
    """
    t = text.strip()
    if t in _NAMED:
        return _NAMED[t]
    if "/" not in t and t not in ("0",):
        raise ValueError(f"cannot read root of unity {text!r}; use 1, -1, i, -i or p/q")
    return RootOfUnity.parse(t)
