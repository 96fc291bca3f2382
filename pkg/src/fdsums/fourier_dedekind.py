"""Fourier-Dedekind sums S_(a_1..a_d; b)(t) and their reduced parts.

Several independent evaluation routes are provided so that each can be
checked against the others:

* :func:`fd_sum` - exact, via the weighted residue count :func:`reduced_sum`
  (defined even when some ``a_i`` share a factor with ``b``);
* :func:`fd_sum_linear_comb` - exact, by peeling one parameter at a time
  off the zero-dimensional sum ``S_b``;
* :func:`fd_sum_pair` - exact, O(b) evaluation for ``d == 2``;
* :func:`fd_sum_complex` - double precision, straight from the root-of-unity
  definition (cross-check only);
* ``fd_sum_cramer`` in :mod:`fdsums.periodic` - exact, as a ratio of
  determinants.

:func:`gen_func_coefficients` recomputes the reduced sum by fully expanding
its generating polynomial.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import NotCoprime
from .exact import delta_z, mod_inverse, residue_low

__all__ = [
    "FDSpec",
    "s_zero_dim",
    "reduced_sum",
    "reduced_vector",
    "reduced_sum_brute",
    "fd_sum",
    "fd_vector",
    "fd_sum_linear_comb",
    "fd_vector_linear_comb",
    "fd_sum_pair",
    "fd_vector_pair",
    "fd_sum_complex",
    "fd_vector_complex",
    "gen_func_coefficients",
    "gen_func_vector",
    "gen_func_polynomial",
    "series_kernel",
    "series_kernel_limit",
    "series_kernel_compact",
    "normalize_reduced",
]


@dataclass(frozen=True)
class FDSpec:
    """Parameters ``(a_1, ..., a_d; b)`` of a Fourier-Dedekind sum.

    ``a`` may be empty (dimension 0). With ``requires_coprime`` set,
    construction fails unless every ``a_i`` is a unit modulo ``b``.
    """

    a: tuple[int, ...]
    b: int
    requires_coprime: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if not isinstance(self.b, int) or self.b < 1:
            raise ValueError(f"b must be a positive integer, got {self.b!r}")
        if any(x == 0 for x in self.a):
            raise ValueError(f"parameters must be nonzero, got {self.a}")
        if self.requires_coprime:
            self.check_coprime()

    @classmethod
    def parse(cls, text: str, requires_coprime: bool = False) -> "FDSpec":
        """Parse ``"1,3;4"`` (or ``";4"`` for dimension 0)."""
        text = text.strip().strip("()")
        a_part, sep, b_part = text.partition(";")
        if not sep:
            raise ValueError(f"expected 'a1,...,ad;b', got {text!r}")
        a = tuple(int(x) for x in a_part.split(",") if x.strip())
        return cls(a, int(b_part), requires_coprime)

    @property
    def d(self) -> int:
        return len(self.a)

    def is_coprime(self) -> bool:
        return all(gcd(x, self.b) == 1 for x in self.a)

    def check_coprime(self) -> None:
        bad = [x for x in self.a if gcd(x, self.b) != 1]
        if bad:
            raise NotCoprime(f"{bad} not coprime to b={self.b}")

    def drop(self, i: int) -> "FDSpec":
        """The spec with the ``i``-th parameter removed."""
        return FDSpec(self.a[:i] + self.a[i + 1:], self.b)

    def subset(self, idx: Iterable[int]) -> "FDSpec":
        return FDSpec(tuple(self.a[i] for i in idx), self.b)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.a))};{self.b})"


def s_zero_dim(b: int, t: int) -> Fraction:
    """The zero-dimensional sum ``S_b(t) = delta(t/b) - 1/b``."""
    return delta_z(t, b) - Fraction(1, b)


def _step(vec: Sequence[int], a: int, b: int) -> list[int]:
    # new[t] = sum_{k=1}^{b-1} k * vec[(t + k a) mod b]
    a %= b
    shifted = [(k, (k * a) % b) for k in range(1, b)]
    return [sum(k * vec[(t + ka) % b] for k, ka in shifted) for t in range(b)]


@lru_cache(maxsize=4096)
def _reduced_vector(a: tuple[int, ...], b: int) -> tuple[int, ...]:
    vec = [1] + [0] * (b - 1)
    for x in a:
        vec = _step(vec, x, b)
    return tuple(vec)


def reduced_vector(spec: FDSpec) -> tuple[int, ...]:
    """All ``b`` values of the reduced sum, indexed by ``t mod b``."""
    return _reduced_vector(tuple(x % spec.b for x in spec.a), spec.b)


def reduced_sum(spec: FDSpec, t: int) -> int:
    """Weighted count ``sum k_1...k_d`` over ``k_i in [1, b-1]`` with ``sum a_i k_i = -t (mod b)``.

    Computed one parameter at a time in O(d b^2). Dimension 0 gives
    ``delta(t/b)``.
    """
    return reduced_vector(spec)[t % spec.b]


def reduced_sum_brute(spec: FDSpec, t: int) -> int:
    """Direct enumeration over all ``(b-1)^d`` tuples; test oracle only."""
    from itertools import product

    b = spec.b
    total = 0
    for ks in product(range(1, b), repeat=spec.d):
        if (sum(x * k for x, k in zip(spec.a, ks)) + t) % b == 0:
            w = 1
            for k in ks:
                w *= k
            total += w
    if spec.d == 0:
        return delta_z(t, b)
    return total


def normalize_reduced(reduced: int, d: int, b: int) -> Fraction:
    """``(-1)^d / b^d * (reduced - C(b,2)^d / b)``."""
    return Fraction((-1) ** d * (b * reduced - comb(b, 2) ** d), b ** (d + 1))


def fd_sum(spec: FDSpec, t: int) -> Fraction:
    """Exact ``S_(a;b)(t)`` via the reduced sum. Works for non-coprime ``a_i`` too."""
    return normalize_reduced(reduced_sum(spec, t), spec.d, spec.b)


def fd_vector(spec: FDSpec) -> tuple[Fraction, ...]:
    """``(S(0), ..., S(b-1))`` via the reduced sum."""
    d, b = spec.d, spec.b
    return tuple(normalize_reduced(r, d, b) for r in reduced_vector(spec))


@lru_cache(maxsize=4096)
def _linear_comb_scaled(a: tuple[int, ...], b: int) -> tuple[int, ...]:
    # W_j = b^(j+1) * S_(a_1..a_j); W_0 = b * S_b, W_j = -sum_k k W_{j-1}(t + k a_j)
    w = [b - 1] + [-1] * (b - 1)
    for x in a:
        w = [-v for v in _step(w, x, b)]
    return tuple(w)


def fd_vector_linear_comb(spec: FDSpec) -> tuple[Fraction, ...]:
    """All values by the recursion ``b S_(a_1..a_d) = -sum_k k S_(a_1..a_{d-1})(t + k a_d)``."""
    if spec.d < 1:
        raise ValueError("linear-combination route needs d >= 1")
    spec.check_coprime()
    b = spec.b
    scale = b ** (spec.d + 1)
    return tuple(Fraction(v, scale) for v in _linear_comb_scaled(spec.a, b))


def fd_sum_linear_comb(spec: FDSpec, t: int) -> Fraction:
    return fd_vector_linear_comb(spec)[t % spec.b]


def _pair_reduced(a1: int, a2: int, b: int, t: int, inv2: int) -> int:
    return sum(k * residue_low(inv2 * (-t - k * a1), b) for k in range(1, b))


def fd_sum_pair(a1: int, a2: int, b: int, t: int) -> Fraction:
    """Two-dimensional sum in O(b) using one modular inverse.

    The reduced part is ``sum_k k [a2^-1 (-t - k a1)]`` with representatives
    in ``[0, b)``.
    """
    if gcd(a1, b) != 1 or gcd(a2, b) != 1:
        raise NotCoprime(f"({a1},{a2}) not coprime to b={b}")
    inv2 = mod_inverse(a2, b)
    return normalize_reduced(_pair_reduced(a1, a2, b, t, inv2), 2, b)


def fd_vector_pair(a1: int, a2: int, b: int) -> tuple[Fraction, ...]:
    if gcd(a1, b) != 1 or gcd(a2, b) != 1:
        raise NotCoprime(f"({a1},{a2}) not coprime to b={b}")
    inv2 = mod_inverse(a2, b)
    return tuple(normalize_reduced(_pair_reduced(a1, a2, b, t, inv2), 2, b) for t in range(b))


def _roots(exponents: np.ndarray, b: int) -> np.ndarray:
    # reduce exponents mod b before exponentiating to keep the phase accurate
    return np.exp(2j * np.pi * (exponents % b) / b)


def fd_vector_complex(spec: FDSpec) -> np.ndarray:
    """Floating-point values of the root-of-unity definition for every ``t in [0, b)``."""
    spec.check_coprime()
    b = spec.b
    if b < 2:
        raise ValueError("root-of-unity definition needs b >= 2")
    j = np.arange(1, b)
    denom = np.ones(b - 1, dtype=complex)
    for x in spec.a:
        denom *= 1 - _roots(j * x, b)
    t = np.arange(b)
    numer = _roots(np.outer(t, j), b)
    return (numer / denom).sum(axis=1) / b


def fd_sum_complex(spec: FDSpec, t: int) -> complex:
    """``(1/b) sum_j xi^(jt) / prod_i (1 - xi^(j a_i))`` in double precision."""
    spec.check_coprime()
    b = spec.b
    if b < 2:
        raise ValueError("root-of-unity definition needs b >= 2")
    xi = [cmath.exp(2j * cmath.pi * m / b) for m in range(b)]
    total = 0j
    for j in range(1, b):
        den = 1 + 0j
        for x in spec.a:
            den *= 1 - xi[(j * x) % b]
        total += xi[(j * t) % b] / den
    return total / b


# products whose coefficients stay below this fit comfortably in int64
_INT64_SAFE = 2 ** 62


def gen_func_polynomial(spec: FDSpec) -> list[int]:
    """Dense coefficients of ``prod_i (z^a_i + 2 z^(2 a_i) + ... + (b-1) z^((b-1) a_i))``.

    Index ``n`` holds the coefficient of ``z^n``; requires ``a_i >= 1``.
    """
    if any(x < 1 for x in spec.a):
        raise ValueError("generating function needs positive a_i")
    b = spec.b
    if b == 1 and spec.d:
        return [0]
    bound = (comb(b, 2)) ** spec.d
    use_numpy = bound < _INT64_SAFE
    poly = np.array([1], dtype=np.int64) if use_numpy else [1]
    for x in spec.a:
        factor = [0] * ((b - 1) * x + 1)
        for k in range(1, b):
            factor[k * x] = k
        if use_numpy:
            poly = np.convolve(poly, np.array(factor, dtype=np.int64))
        else:
            out = [0] * (len(poly) + len(factor) - 1)
            nz = [(e, c) for e, c in enumerate(factor) if c]
            for i, p in enumerate(poly):
                if p:
                    for e, c in nz:
                        out[i + e] += p * c
            poly = out
    return [int(c) for c in poly]


def gen_func_coefficients(spec: FDSpec, t: int) -> int:
    """Sum of the generating-polynomial coefficients at exponents ``= -t (mod b)``."""
    poly = gen_func_polynomial(spec)
    b = spec.b
    start = (-t) % b
    return sum(poly[start::b])


def gen_func_vector(spec: FDSpec) -> tuple[int, ...]:
    """:func:`gen_func_coefficients` for ``t = 0, ..., b-1`` from a single expansion."""
    poly = gen_func_polynomial(spec)
    b = spec.b
    return tuple(sum(poly[(-t) % b::b]) for t in range(b))


def series_kernel(a: int, b: int, z: complex) -> complex:
    """``f_(a;b)(z) = sum_{k=1}^{b-1} k z^(k a)`` evaluated directly."""
    return sum(k * z ** (k * a) for k in range(1, b))


def series_kernel_limit(a: int, b: int, j: int) -> complex:
    """Limit of the compact rational form of ``f_(a;b)`` at ``z -> xi_b^j``.

    ``C(b, 2)`` when ``b | j``, else ``-b / (1 - xi_b^(j a))``.
    """
    if j % b == 0:
        return complex(comb(b, 2))
    return -b / (1 - cmath.exp(2j * cmath.pi * ((j * a) % b) / b))


def series_kernel_compact(a: int, b: int, z: complex) -> complex:
    """``((b-1) z^(a(b+1)) - b z^(ab) + z^a) / (1 - z^a)^2``; undefined where ``z^a == 1``."""
    za = z ** a
    return ((b - 1) * z ** (a * (b + 1)) - b * z ** (a * b) + za) / (1 - za) ** 2
