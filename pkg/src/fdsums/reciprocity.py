"""Reciprocity for Fourier-Dedekind sums and its lattice-point application.

The polynomial part ``poly_{a_1..a_d}`` of the restricted partition
function is evaluated from its Bernoulli-number closed form; the reciprocal
sum ``R_{a_1..a_d}(t)`` cycles which parameter serves as modulus. Rademacher
reciprocity ``R(n) = -poly(-n)`` is checked on the three integer ranges where
it holds, and the count of lattice points in the right triangle
``ex + fy <= tr`` is computed both from its closed form and by brute force.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import factorial, gcd, prod
from typing import Iterable, Sequence

from .errors import NonIntegerResult, NotCoprime, NotPairwiseCoprime
from .exact import as_rational, bernoulli_table
from .fourier_dedekind import FDSpec, fd_sum
from .report import VerificationReport

__all__ = [
    "PolyCoeffs",
    "TriangleSpec",
    "poly_coefficients",
    "poly_part",
    "restricted_partition",
    "reciprocal_sum_R",
    "pie_negation",
    "pie_shift",
    "rpie_negation",
    "rpie_shift",
    "poly_negation_pie",
    "poly_negated_closed_form",
    "poly_homogeneity_form",
    "rademacher_range",
    "verify_rademacher_extended",
    "verify_rademacher_grid",
    "verify_pie_grid",
    "lattice_count_formula",
    "lattice_count_brute",
    "verify_lattice_grid",
    "pairwise_coprime",
]


def pairwise_coprime(a_list: Sequence[int]) -> bool:
    return all(gcd(x, y) == 1 for x, y in combinations(a_list, 2))


def _check_pairwise(a_list: Sequence[int]) -> None:
    if not a_list:
        raise ValueError("need at least one part")
    if any(x == 0 for x in a_list):
        raise ValueError("parts must be nonzero")
    if not pairwise_coprime(a_list):
        raise NotPairwiseCoprime(f"{tuple(a_list)} is not pairwise coprime")


@dataclass(frozen=True)
class PolyCoeffs:
    """``poly_{a}`` as dense coefficients, highest degree (``d-1``) first."""

    a: tuple[int, ...]
    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t) -> Fraction:
        t = as_rational(t)
        acc = Fraction(0)
        for c in self.coeffs:
            acc = acc * t + c
        return acc


def _mul_trunc(p: list[Fraction], q: list[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i, x in enumerate(p[:n]):
        if x:
            for j, y in enumerate(q[: n - i]):
                out[i + j] += x * y
    return out


def poly_coefficients(a_list: Sequence[int]) -> PolyCoeffs:
    """Coefficients of the polynomial part of the restricted partition function.

    The coefficient of ``t^(d-1-m)`` is ``(-1)^m / (d-1-m)!`` times the sum over
    ``k_1 + ... + k_d = m`` of ``prod a_i^k_i B_k_i / k_i!``, all over ``prod a_i``.
    Parts may be negative (the formula is homogeneous of degree -1).
    """
    a = tuple(int(x) for x in a_list)
    _check_pairwise(a)
    d = len(a)
    bern = bernoulli_table(d)
    # inner sums are the x^m coefficients of prod_i sum_k (a_i x)^k B_k / k!
    series = [Fraction(1)] + [Fraction(0)] * (d - 1)
    for x in a:
        factor = [Fraction(x ** k) * bern[k] / factorial(k) for k in range(d)]
        series = _mul_trunc(series, factor, d)
    scale = Fraction(1, prod(a))
    coeffs = tuple(
        scale * (-1) ** m * series[m] / factorial(d - 1 - m) for m in range(d)
    )
    return PolyCoeffs(a, coeffs)


def poly_part(a_list: Sequence[int], t) -> Fraction:
    return poly_coefficients(a_list)(t)


def restricted_partition(a_list: Sequence[int], n: int) -> int:
    """Number of ``(m_1..m_d) >= 0`` with ``sum m_i a_i == n`` (coin-change DP)."""
    if any(x < 1 for x in a_list):
        raise ValueError("parts must be positive")
    if n < 0:
        return 0
    ways = [1] + [0] * n
    for a in a_list:
        for s in range(a, n + 1):
            ways[s] += ways[s - a]
    return ways[n]


def reciprocal_sum_R(a_list: Sequence[int], t: int) -> Fraction:
    """``R_{a}(t) = sum_m S_(a without a_m; a_m)(t)``; terms with modulus 1 vanish."""
    a = tuple(int(x) for x in a_list)
    _check_pairwise(a)
    if any(x < 1 for x in a):
        raise ValueError("parts must be positive")
    total = Fraction(0)
    for m, am in enumerate(a):
        if am == 1:
            continue
        total += fd_sum(FDSpec(a[:m] + a[m + 1:], am), t)
    return total


def _subset_sums(spec: FDSpec, t: int, sign) -> Fraction:
    total = Fraction(0)
    for k in range(spec.d + 1):
        s = sign(k)
        for idx in combinations(range(spec.d), k):
            total += s * fd_sum(spec.subset(idx), t)
    return total


def pie_negation(spec: FDSpec, t: int) -> Fraction:
    """``sum_k (-1)^k sum_{|I|=k} S_(a_I;b)(t)``, which equals ``S(-t)``."""
    spec.check_coprime()
    return _subset_sums(spec, t, lambda k: (-1) ** k)


def pie_shift(spec: FDSpec, t: int) -> Fraction:
    """``sum_k (-1)^(d-k) sum_{|I|=k} S_(a_I;b)(t)``, which equals ``S(t + a_1 + ... + a_d)``."""
    spec.check_coprime()
    d = spec.d
    return _subset_sums(spec, t, lambda k: (-1) ** (d - k))


def _r_subset_sums(a: tuple[int, ...], t: int, sign) -> Fraction:
    total = Fraction(0)
    for k in range(len(a)):
        s = sign(k)
        for idx in combinations(range(len(a)), k + 1):
            total += s * reciprocal_sum_R([a[i] for i in idx], t)
    return total


def rpie_negation(a_list: Sequence[int], t: int) -> Fraction:
    """``sum_{k=0}^{d-1} (-1)^k sum_{|J|=k+1} R_J(t)``, which equals ``R(-t)``."""
    a = tuple(a_list)
    _check_pairwise(a)
    return _r_subset_sums(a, t, lambda k: (-1) ** k)


def rpie_shift(a_list: Sequence[int], t: int) -> Fraction:
    """``sum_{k=0}^{d-1} (-1)^(d-1-k) sum_{|J|=k+1} R_J(t)``, which equals ``R(t + a_1 + ... + a_d)``."""
    a = tuple(a_list)
    _check_pairwise(a)
    d = len(a)
    return _r_subset_sums(a, t, lambda k: (-1) ** (d - 1 - k))


def poly_negation_pie(a_list: Sequence[int], t) -> Fraction:
    """``sum_{k=1}^{d} (-1)^k sum_{|I|=k} poly_{a_I}(t)``, i.e. ``poly_{-a_1..-a_d}(t)``."""
    a = tuple(a_list)
    _check_pairwise(a)
    total = Fraction(0)
    for k in range(1, len(a) + 1):
        for idx in combinations(a, k):
            total += (-1) ** k * poly_part(idx, t)
    return total


def poly_negated_closed_form(a_list: Sequence[int], t) -> Fraction:
    """``(-1)^d poly_{a}(t - a_1 - ... - a_d)``."""
    a = tuple(a_list)
    return (-1) ** len(a) * poly_part(a, as_rational(t) - sum(a))


def poly_homogeneity_form(a_list: Sequence[int], t) -> Fraction:
    """``-poly_{a}(-t)``; equal to ``poly_{-a}(t)`` by homogeneity of degree -1."""
    return -poly_part(a_list, -as_rational(t))


def rademacher_range(a_list: Sequence[int], n: int) -> str | None:
    """Which of the ranges (i), (ii), (iii) contains ``n``, or ``None``."""
    s, lo = sum(a_list), min(a_list)
    if 1 - lo <= n <= -1:
        return "i"
    if 1 <= n <= s - 1:
        return "ii"
    if s + 1 <= n <= s + lo - 1:
        return "iii"
    return None


def verify_rademacher_extended(a_list: Sequence[int], n: int, report: VerificationReport | None = None) -> VerificationReport:
    """Check ``R(n) == -poly(-n)`` if ``n`` lies in one of the three ranges.

    Out-of-range ``n`` are evaluated too and recorded as observations only.
    """
    a = tuple(a_list)
    _check_pairwise(a)
    if report is None:
        report = VerificationReport("rademacher_extended", f"a={a}, n={n}")
    lhs = reciprocal_sum_R(a, n)
    rhs = -poly_part(a, -n)
    rng = rademacher_range(a, n)
    params = {"a": list(a), "n": n, "range": rng}
    if rng is None:
        report.observe(params, lhs, rhs, "holds" if lhs == rhs else "differs")
    else:
        report.check(lhs == rhs, params, lhs, rhs)
    return report


def verify_rademacher_grid(max_a: int = 10, dims: int = 3, include_outside: bool = False) -> VerificationReport:
    """All pairwise-coprime multisets of size ``dims`` from ``[1, max_a]``, every ``n`` in ranges (i)-(iii)."""
    report = VerificationReport("rademacher_extended", f"dims={dims}, a_i<={max_a}")
    for a in combinations_with_replacement(range(1, max_a + 1), dims):
        if not pairwise_coprime(a):
            continue
        s, lo = sum(a), min(a)
        lo_n, hi_n = 1 - lo, s + lo - 1
        if include_outside:
            lo_n, hi_n = lo_n - 2, hi_n + 2
        for n in range(lo_n, hi_n + 1):
            if n == 0 and not include_outside:
                continue
            if rademacher_range(a, n) is None and not include_outside:
                continue
            verify_rademacher_extended(a, n, report)
    return report


def verify_pie_grid(max_b: int = 20, dims: int = 3) -> VerificationReport:
    """Both subset-sum identities for ``S`` over every coprime ``a`` with ``d <= dims``, ``b <= max_b``."""
    from itertools import product

    report = VerificationReport("subset_sums", f"d<={dims}, b<={max_b}")
    for b in range(2, max_b + 1):
        units = [x for x in range(1, b) if gcd(x, b) == 1]
        for d in range(1, dims + 1):
            for a in combinations_with_replacement(units, d):
                spec = FDSpec(a, b)
                for t in range(b):
                    params = {"a": list(a), "b": b, "t": t}
                    lhs, rhs = fd_sum(spec, -t), pie_negation(spec, t)
                    report.check(lhs == rhs, {**params, "part": "negation"}, lhs, rhs)
                    lhs, rhs = fd_sum(spec, t + sum(a)), pie_shift(spec, t)
                    report.check(lhs == rhs, {**params, "part": "shift"}, lhs, rhs)
    return report


@dataclass(frozen=True)
class TriangleSpec:
    """Right triangle ``x, y >= 0, e x + f y <= r`` with ``gcd(e, f) == 1``."""

    e: int
    f: int
    r: int

    def __post_init__(self):
        if min(self.e, self.f, self.r) < 1:
            raise ValueError("e, f, r must be positive")
        if gcd(self.e, self.f) != 1:
            raise NotCoprime(f"gcd({self.e}, {self.f}) != 1")


def lattice_count_formula(tri: TriangleSpec, t: int) -> int:
    """Lattice points of the ``t``-th dilate from the quadratic closed form plus ``R_{e,f,1}(-tr)``."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    e, f = tri.e, tri.f
    x = t * tri.r
    value = (
        Fraction(x * x, 2 * e * f)
        + Fraction(x, 2) * (Fraction(1, e) + Fraction(1, f) + Fraction(1, e * f))
        + Fraction(1, 4) * (1 + Fraction(1, e) + Fraction(1, f))
        + Fraction(1, 12) * (Fraction(e, f) + Fraction(f, e) + Fraction(1, e * f))
        + reciprocal_sum_R((e, f, 1), -x)
    )
    if value.denominator != 1 or value < 0:
        raise NonIntegerResult(f"L({t}) for {tri} evaluated to {value}")
    return int(value)


def lattice_count_brute(tri: TriangleSpec, t: int) -> int:
    """Direct count of ``(x, y) >= 0`` with ``e x + f y <= t r``."""
    bound = t * tri.r
    if bound < 0:
        return 0
    return sum((bound - tri.e * x) // tri.f + 1 for x in range(bound // tri.e + 1))


def verify_lattice_grid(max_ef: int = 8, max_t: int = 4) -> VerificationReport:
    report = VerificationReport("lattice_count", f"e,f<={max_ef}, r<=ef, t<={max_t}")
    for e in range(1, max_ef + 1):
        for f in range(1, max_ef + 1):
            if gcd(e, f) != 1:
                continue
            for r in range(1, e * f + 1):
                tri = TriangleSpec(e, f, r)
                for t in range(max_t + 1):
                    params = {"e": e, "f": f, "r": r, "t": t}
                    try:
                        lhs = lattice_count_formula(tri, t)
                    except NonIntegerResult as exc:
                        report.check(False, params, str(exc), lattice_count_brute(tri, t), "non-integer")
                        continue
                    rhs = lattice_count_brute(tri, t)
                    report.check(lhs == rhs, params, lhs, rhs)
    return report
