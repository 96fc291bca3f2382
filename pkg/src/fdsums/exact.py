"""Exact scalars and the small number-theoretic helpers everything else uses.

All rational values are :class:`fractions.Fraction` instances (aliased as
``Rational``); they are always stored in lowest terms with a positive
denominator, so equality is structural.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .errors import NotCoprime

__all__ = [
    "Rational",
    "Convention",
    "Residue",
    "residue_low",
    "residue_high",
    "mod_inverse",
    "sawtooth",
    "sawtooth_slash",
    "bernoulli",
    "bernoulli_table",
    "delta_z",
    "as_rational",
]

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


class Convention(enum.Enum):
    """Which complete residue system a representative is drawn from."""

    HALF_OPEN_LOW = "[0,b)"
    HALF_OPEN_HIGH = "(0,b]"


def residue_low(x: int, b: int) -> int:
    """Representative of ``x mod b`` in ``[0, b)``."""
    return x % b


def residue_high(x: int, b: int) -> int:
    """Representative of ``x mod b`` in ``(0, b]``."""
    r = x % b
    return r if r else b


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int
    convention: Convention = Convention.HALF_OPEN_LOW

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if self.convention is Convention.HALF_OPEN_LOW:
            ok = 0 <= self.value < self.modulus
        else:
            ok = 0 < self.value <= self.modulus
        if not ok:
            raise ValueError(
                f"{self.value} is not a {self.convention.value} representative mod {self.modulus}"
            )

    @classmethod
    def of(cls, x: int, b: int, convention: Convention = Convention.HALF_OPEN_LOW) -> "Residue":
        if convention is Convention.HALF_OPEN_LOW:
            return cls(residue_low(x, b), b, convention)
        return cls(residue_high(x, b), b, convention)

    def __int__(self) -> int:
        return self.value


def mod_inverse(a: int, b: int) -> int:
    """Inverse of ``a`` modulo ``b`` as a representative in ``[0, b)``.

    ``b == 1`` returns 0. Raises :class:`NotCoprime` when ``gcd(a, b) != 1``.
    """
    if b < 1:
        raise ValueError(f"modulus must be positive, got {b}")
    if gcd(a, b) != 1:
        raise NotCoprime(f"{a} has no inverse modulo {b}")
    if b == 1:
        return 0
    return pow(a, -1, b)


def sawtooth(x) -> Fraction:
    """The sawtooth ((x)): ``x - floor(x) - 1/2`` off the integers, 0 on them."""
    x = as_rational(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def sawtooth_slash(x_num: int, b: int) -> Fraction:
    r"""The shifted sawtooth \x/b/: ``r/b - 1/2`` with ``r`` the (0, b] representative of ``x_num``."""
    if b < 1:
        raise ValueError(f"b must be positive, got {b}")
    return Fraction(residue_high(x_num, b), b) - Fraction(1, 2)


@lru_cache(maxsize=None)
def _bernoulli_upto(n: int) -> tuple[Fraction, ...]:
    # sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1, which fixes B_1 = -1/2
    table = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum(comb(m + 1, k) * table[k] for k in range(m))
        table.append(-s / (m + 1))
    return tuple(table)


def bernoulli_table(n_max: int) -> tuple[Fraction, ...]:
    """Bernoulli numbers ``B_0 .. B_{n_max}`` (convention ``B_1 = -1/2``)."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return _bernoulli_upto(n_max)


def bernoulli(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    return _bernoulli_upto(n)[n]


def delta_z(x_num: int, b: int) -> int:
    """Indicator of ``x_num / b`` being an integer."""
    if b < 1:
        raise ValueError(f"b must be positive, got {b}")
    return 1 if x_num % b == 0 else 0
