"""The convolution algebra of b-periodic rational functions.

A :class:`PeriodicVector` stores one period ``f(0), ..., f(b-1)``. The
Fourier-Dedekind sums with fixed ``b`` and their inverses
``(I - T^a_1)...(I - T^a_d) delta`` form an abelian group under
:func:`convolve` with identity ``S_b``; this module provides that group, the
linear system whose unique solution is ``S``, its determinant, and Cramer's
rule for the individual values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Iterable, Sequence

from .errors import NotCoprime, NotPrime, NotZeroMean, PeriodMismatch
from .exact import as_rational
from .fourier_dedekind import FDSpec, fd_vector

__all__ = [
    "PeriodicVector",
    "SquareMatrix",
    "convolve",
    "shift",
    "difference_op",
    "sum_of_shifts",
    "fd_periodic",
    "fd_inverse",
    "check_convolution_characterization",
    "fd_system_matrix",
    "bareiss_det",
    "fd_sum_cramer",
    "fd_vector_cramer",
    "constancy_check",
    "constancy_direct",
    "constancy_remainder",
    "prime_constancy_criterion",
    "multiplicities",
    "is_prime",
]


@dataclass(frozen=True)
class PeriodicVector:
    """A ``b``-periodic function on the integers, stored as one period."""

    b: int
    samples: tuple[Fraction, ...]

    def __post_init__(self):
        if self.b < 1:
            raise ValueError(f"period must be positive, got {self.b}")
        samples = tuple(as_rational(x) for x in self.samples)
        if len(samples) != self.b:
            raise ValueError(f"expected {self.b} samples, got {len(samples)}")
        object.__setattr__(self, "samples", samples)

    @classmethod
    def from_function(cls, b: int, f: Callable[[int], object]) -> "PeriodicVector":
        return cls(b, tuple(f(t) for t in range(b)))

    @classmethod
    def delta(cls, b: int, shift_by: int = 0) -> "PeriodicVector":
        """Indicator ``delta((t + shift_by)/b)``."""
        return cls.from_function(b, lambda t: 1 if (t + shift_by) % b == 0 else 0)

    @classmethod
    def identity(cls, b: int) -> "PeriodicVector":
        """``S_b(t) = delta(t/b) - 1/b``, the identity for convolution on zero-mean vectors."""
        return cls.from_function(b, lambda t: (1 if t == 0 else 0) - Fraction(1, b))

    @classmethod
    def basis(cls, b: int, i: int) -> "PeriodicVector":
        """``e_i(t) = delta((t+i)/b) - 1/b``; ``e_0 .. e_{b-2}`` span the zero-mean subspace."""
        return cls.from_function(b, lambda t: (1 if (t + i) % b == 0 else 0) - Fraction(1, b))

    def __call__(self, t: int) -> Fraction:
        return self.samples[t % self.b]

    def __len__(self) -> int:
        return self.b

    def __iter__(self):
        return iter(self.samples)

    def total(self) -> Fraction:
        return sum(self.samples, Fraction(0))

    def is_zero_mean(self) -> bool:
        return self.total() == 0

    def _check_same(self, other: "PeriodicVector") -> None:
        if other.b != self.b:
            raise PeriodMismatch(f"periods differ: {self.b} vs {other.b}")

    def __add__(self, other: "PeriodicVector") -> "PeriodicVector":
        self._check_same(other)
        return PeriodicVector(self.b, tuple(x + y for x, y in zip(self.samples, other.samples)))

    def __sub__(self, other: "PeriodicVector") -> "PeriodicVector":
        self._check_same(other)
        return PeriodicVector(self.b, tuple(x - y for x, y in zip(self.samples, other.samples)))

    def __neg__(self) -> "PeriodicVector":
        return PeriodicVector(self.b, tuple(-x for x in self.samples))

    def scale(self, c) -> "PeriodicVector":
        c = as_rational(c)
        return PeriodicVector(self.b, tuple(c * x for x in self.samples))

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.samples) + ")"


def convolve(f: PeriodicVector, g: PeriodicVector) -> PeriodicVector:
    """Cyclic convolution ``(f*g)(t) = sum_{m=0}^{b-1} f(t-m) g(m)``."""
    if f.b != g.b:
        raise PeriodMismatch(f"periods differ: {f.b} vs {g.b}")
    b = f.b
    fs, gs = f.samples, g.samples
    nz = [(m, gm) for m, gm in enumerate(gs) if gm]
    out = [sum((fs[(t - m) % b] * gm for m, gm in nz), Fraction(0)) for t in range(b)]
    return PeriodicVector(b, tuple(out))


def shift(f: PeriodicVector, a: int) -> PeriodicVector:
    """``(T^a f)(t) = f(t + a)``."""
    b = f.b
    return PeriodicVector(b, tuple(f.samples[(t + a) % b] for t in range(b)))


def difference_op(f: PeriodicVector, a_list: Iterable[int]) -> PeriodicVector:
    """Apply ``(I - T^a_1)...(I - T^a_k)``; the factors commute."""
    for a in a_list:
        f = f - shift(f, a)
    return f


def sum_of_shifts(f: PeriodicVector) -> PeriodicVector:
    """``(I + T + ... + T^(b-1)) f``; vanishes exactly on the zero-mean subspace."""
    s = f.total()
    return PeriodicVector(f.b, (s,) * f.b)


def fd_periodic(spec: FDSpec) -> PeriodicVector:
    return PeriodicVector(spec.b, fd_vector(spec))


def fd_inverse(spec: FDSpec, *, allow_noncoprime: bool = False) -> PeriodicVector:
    """Convolution inverse ``(I - T^a_1)...(I - T^a_d) delta(t/b)`` of ``S_(a;b)``.

    For ``d == 0`` this is ``delta`` itself, which acts as ``S_b`` on
    zero-mean vectors.
    """
    if not allow_noncoprime:
        spec.check_coprime()
    return difference_op(PeriodicVector.delta(spec.b), spec.a)


def check_convolution_characterization(
    a_list: Sequence[int], f: PeriodicVector, g: PeriodicVector
) -> bool:
    """Whether ``(I - T^a_1)...(I - T^a_d)(f * g) == g`` holds exactly.

    Both ``f`` and ``g`` must have zero mean.
    """
    if f.b != g.b:
        raise PeriodMismatch(f"periods differ: {f.b} vs {g.b}")
    if not f.is_zero_mean():
        raise NotZeroMean("f does not have zero mean")
    if not g.is_zero_mean():
        raise NotZeroMean("g does not have zero mean")
    return difference_op(convolve(f, g), a_list) == g


@dataclass(frozen=True)
class SquareMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.rows[r][c]

    def with_column(self, c: int, column: Sequence) -> "SquareMatrix":
        if len(column) != self.n:
            raise ValueError("column length does not match matrix size")
        return SquareMatrix(
            tuple(row[:c] + (as_rational(v),) + row[c + 1:] for row, v in zip(self.rows, column))
        )

    def det(self) -> Fraction:
        return bareiss_det(self.rows)

    def as_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


def bareiss_det(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Rational rows are first scaled to integers, so all elimination steps are
    exact integer divisions.
    """
    n = len(rows)
    m: list[list[int]] = []
    scale = Fraction(1)
    for r in rows:
        r = [as_rational(x) for x in r]
        den = lcm(*(x.denominator for x in r)) if r else 1
        scale /= den
        m.append([int(x * den) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1] * scale if n else Fraction(1)


def _inverse_samples(a_list: Sequence[int], b: int) -> list[int]:
    # one period of (I - T^a_1)...(I - T^a_d) delta with (T^a f)(t) = f(t + a)
    vals = [0] * b
    vals[0] = 1
    for a in a_list:
        a %= b
        vals = [vals[t] - vals[(t + a) % b] for t in range(b)]
    return vals


def _system_rows(spec: FDSpec, allow_noncoprime: bool) -> list[list[int]]:
    if spec.d < 1:
        raise ValueError("system matrix needs d >= 1")
    if spec.b < 2:
        raise ValueError("system matrix needs b >= 2")
    if not allow_noncoprime:
        spec.check_coprime()
    b = spec.b
    inv = _inverse_samples(spec.a, b)
    rows = [[inv[(r - c + 1) % b] for c in range(b)] for r in range(b - 1)]
    rows.append([1] * b)
    return rows


def fd_system_matrix(spec: FDSpec, *, allow_noncoprime: bool = False) -> SquareMatrix:
    """The ``b x b`` matrix ``M`` with ``M[r][c] = S^-1(r - c + 1)`` for ``r < b-1`` and a last row of ones.

    ``M @ (S(0), ..., S(b-1)) = (S_b(1), ..., S_b(b-1), 0)``.
    """
    return SquareMatrix(tuple(tuple(r) for r in _system_rows(spec, allow_noncoprime)))


def _cramer_value(det_t: Fraction, spec: FDSpec) -> Fraction:
    return (-1) ** (spec.b - 1) * det_t / spec.b ** spec.d


def fd_sum_cramer(spec: FDSpec, t: int) -> Fraction:
    """``S(t) = (-1)^(b-1) det(M^(t)) / b^d`` where column ``t`` of ``M`` is replaced by ``(-1/b, ..., -1/b, 0)``."""
    spec.check_coprime()
    b = spec.b
    if not 0 <= t < b:
        raise ValueError(f"t must lie in [0, {b}), got {t}")
    m = fd_system_matrix(spec)
    col = [Fraction(-1, b)] * (b - 1) + [Fraction(0)]
    return _cramer_value(m.with_column(t, col).det(), spec)


def _flint_available() -> bool:
    try:
        import flint  # noqa: F401
    except ImportError:
        return False
    return True


def fd_vector_cramer(spec: FDSpec, backend: str = "bareiss") -> tuple[Fraction, ...]:
    """Cramer's rule for every ``t``.

    The replacement column is ``-(1/b) * (1, ..., 1, 0)``, so each determinant
    is ``-1/b`` times that of an integer matrix. ``backend="flint"`` hands
    those integer determinants to python-flint; ``"bareiss"`` uses
    :func:`bareiss_det`.
    """
    spec.check_coprime()
    b = spec.b
    rows = _system_rows(spec, False)
    if backend == "flint" and not _flint_available():
        backend = "bareiss"
    dets: list[int] = []
    if backend == "flint":
        import flint

        base = flint.fmpz_mat(rows)
        for t in range(b):
            mt = flint.fmpz_mat(base)
            for r in range(b - 1):
                mt[r, t] = 1
            mt[b - 1, t] = 0
            dets.append(int(mt.det()))
    elif backend == "bareiss":
        for t in range(b):
            mt = [row[:t] + [1] + row[t + 1:] for row in rows[:-1]]
            mt.append(rows[-1][:t] + [0] + rows[-1][t + 1:])
            dets.append(int(bareiss_det(mt)))
    else:
        raise ValueError(f"unknown backend {backend!r}")
    # S(t) = (-1)^(b-1) * (-1/b) * det_t / b^d
    sign = -1 if b % 2 == 0 else 1
    den = b ** (spec.d + 1)
    return tuple(Fraction(-sign * dt, den) for dt in dets)


def _product_poly(a_list: Iterable[int], b: int) -> list[int]:
    # coefficients of prod (1 - X^a), exponents folded to [0, b) since X^b = 1 mod Phi
    poly = [1]
    for a in a_list:
        a %= b
        out = poly + [0] * a
        for i, c in enumerate(poly):
            out[i + a] -= c
        poly = out
    return poly


def constancy_remainder(a_list: Iterable[int], b: int) -> list[int]:
    """``prod (1 - X^a_i) mod (1 + X + ... + X^(b-1))``, low degree first, length ``b-1``.

    Exponents are first reduced mod ``b`` (valid because ``X^b = 1`` modulo
    the divisor); the division itself is by a monic integer polynomial.
    """
    if b < 1:
        raise ValueError("b must be positive")
    poly = _product_poly(a_list, b)
    if b == 1:
        return []
    deg_mod = b - 1
    poly = poly[:]
    for deg in range(len(poly) - 1, deg_mod - 1, -1):
        c = poly[deg]
        if c:
            # subtract c * X^(deg - deg_mod) * (1 + X + ... + X^(b-1))
            base = deg - deg_mod
            for i in range(b):
                poly[base + i] -= c
    rem = poly[:deg_mod] + [0] * max(0, deg_mod - len(poly))
    return rem


def constancy_check(spec: FDSpec) -> bool:
    """Whether ``S(1) = ... = S(b-1)``, decided by the polynomial criterion."""
    spec.check_coprime()
    rem = constancy_remainder(spec.a, spec.b)
    return all(c == 0 for c in rem[1:])


def constancy_direct(spec: FDSpec) -> bool:
    """Whether ``S(1) = ... = S(b-1)`` by evaluating the sums."""
    vals = fd_vector(spec)[1:]
    return all(v == vals[0] for v in vals)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def multiplicities(a_list: Iterable[int], p: int) -> list[int]:
    """``[e_1, ..., e_{p-1}]``: how often each nonzero residue occurs in ``a_list``."""
    e = [0] * (p - 1)
    for a in a_list:
        r = a % p
        if r == 0:
            raise NotCoprime(f"{a} is divisible by {p}")
        e[r - 1] += 1
    return e


def prime_constancy_criterion(e: Sequence[int], p: int) -> bool:
    """Multiplicity test for constancy of ``S`` off zero when ``b = p`` is prime.

    ``e[k-1]`` is the multiplicity of residue ``k``. The sum of multiplicities
    must be divisible by ``p-1`` (giving ``e``), ``e_k + e_{p-k} = 2e`` for all
    ``k``, and ``p`` must divide ``sum_{k <= (p-1)/2} k (e - e_{p-k})``.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if len(e) != p - 1:
        raise ValueError(f"expected {p - 1} multiplicities, got {len(e)}")
    if any(x < 0 for x in e):
        raise ValueError("multiplicities must be nonnegative")
    mult = {k: e[k - 1] for k in range(1, p)}
    total = sum(e)
    if total % (p - 1):
        return False
    avg = total // (p - 1)
    if any(mult[k] + mult[p - k] != 2 * avg for k in range(1, p)):
        return False
    half = (p - 1) // 2
    lhs = sum(k * (avg - mult[p - k]) for k in range(1, half + 1))
    rhs = -sum(k * (mult[k] - avg) for k in range(1, half + 1))
    # under the symmetry condition the two displayed sums are negatives of each other
    assert (lhs % p == 0) == (rhs % p == 0)
    return lhs % p == 0
