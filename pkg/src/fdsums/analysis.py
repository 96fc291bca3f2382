"""Averages, bounds, extrema and concavity of Fourier-Dedekind sums.

Every check here scans its parameter range exhaustively with exact
arithmetic; the theorem being checked is never used to produce the values
it is compared against.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Sequence

import numpy as np

from .errors import BTooSmall, NotCoprime
from .exact import delta_z, mod_inverse, sawtooth
from .fourier_dedekind import FDSpec, fd_sum, fd_vector, normalize_reduced, s_zero_dim
from .report import VerificationReport

__all__ = [
    "ExtremaResult",
    "BoundsCertificate",
    "units",
    "euler_phi",
    "average_last",
    "average_all",
    "negate_first",
    "verify_avg",
    "bound_values",
    "bounds_2d",
    "verify_bounds",
    "dedekind_sum",
    "verify_dedekind_corollary",
    "extrema_2d",
    "verify_extrema",
    "concavity_check",
    "verify_concavity",
    "R_a1b",
    "R_ab",
    "r_shift_bound",
    "verify_rshift",
    "bounds_recip_corollary",
    "recip_quadratic",
]


def units(b: int) -> list[int]:
    """Residues in ``[1, b-1]`` coprime to ``b``."""
    return [m for m in range(1, b) if gcd(m, b) == 1]


def euler_phi(b: int) -> int:
    return 1 if b == 1 else len(units(b))


def _check_units(a: Sequence[int], b: int) -> None:
    bad = [x for x in a if gcd(x, b) != 1]
    if bad:
        raise NotCoprime(f"{bad} not coprime to b={b}")


def average_last(prefix: Sequence[int], b: int, t: int, *, shortcut: bool = False) -> Fraction:
    """Mean of ``S_(prefix, m; b)(t)`` over the units ``m`` modulo ``b``.

    The defining sum is evaluated unless ``shortcut`` is set, in which case
    the known value ``S_(prefix; b)(t) / 2`` is returned.
    """
    if b < 3:
        raise BTooSmall(f"averages need b >= 3, got {b}")
    prefix = tuple(prefix)
    _check_units(prefix, b)
    if shortcut:
        return fd_sum(FDSpec(prefix, b), t) / 2
    us = units(b)
    return sum((fd_sum(FDSpec(prefix + (m,), b), t) for m in us), Fraction(0)) / len(us)


def average_all(d: int, b: int, t: int, *, shortcut: bool = False) -> Fraction:
    """Mean of ``S_(m_1..m_d; b)(t)`` over all ``phi(b)^d`` unit tuples."""
    if b < 3:
        raise BTooSmall(f"averages need b >= 3, got {b}")
    if d < 1:
        raise ValueError("d must be >= 1")
    if shortcut:
        return s_zero_dim(b, t) / 2 ** d
    us = units(b)
    total = sum((fd_sum(FDSpec(ms, b), t) for ms in product(us, repeat=d)), Fraction(0))
    return total / len(us) ** d


def negate_first(spec: FDSpec, t: int) -> Fraction:
    """``-S_(a_1, a_2..a_d; b)(t) + S_(a_2..a_d; b)(t)``, which equals ``S_(-a_1, a_2..a_d; b)(t)``."""
    spec.check_coprime()
    if spec.d < 1:
        raise ValueError("need d >= 1")
    return -fd_sum(spec, t) + fd_sum(spec.drop(0), t)


def verify_avg(min_b: int = 3, max_b: int = 30, max_d: int = 2) -> VerificationReport:
    """Both averaging identities for every ``b``, ``d <= max_d``, every unit prefix and every ``t``."""
    report = VerificationReport("averages", f"b in [{min_b},{max_b}], d<={max_d}")
    for b in range(max(min_b, 3), max_b + 1):
        us = units(b)
        for d in range(1, max_d + 1):
            for prefix in product(us, repeat=d - 1):
                inner = fd_vector(FDSpec(prefix, b))
                for t in range(b):
                    lhs = average_last(prefix, b, t)
                    rhs = inner[t] / 2
                    report.check(lhs == rhs, {"part": "last", "prefix": list(prefix), "b": b, "t": t}, lhs, rhs)
            for t in range(b):
                lhs = average_all(d, b, t)
                rhs = (delta_z(t, b) - Fraction(1, b)) / 2 ** d
                report.check(lhs == rhs, {"part": "all", "d": d, "b": b, "t": t}, lhs, rhs)
    return report


def bound_values(b: int, t: int) -> tuple[Fraction, Fraction]:
    """``(lower, upper)`` claimed for ``S_(a_1,a_2;b)(t)``."""
    hi = Fraction((b - 1) * (b + 1), 12 * b)
    lo = Fraction((b - 1) * (b - 5), 12 * b)
    if t % b == 0:
        return -lo, hi
    return -hi, lo


def _predicted_attainers(b: int, t: int) -> tuple[set, set]:
    us = units(b)
    pairs = [(x, y) for x in us for y in us]
    if t % b == 0:
        up = {(x, y) for x, y in pairs if (x + y) % b == 0}
        lo = {(x, y) for x, y in pairs if (x - y) % b == 0}
    else:
        tt = t % b
        up = {(x, y) for x, y in pairs if x == tt and (-y) % b == tt}
        lo = {(x, y) for x, y in pairs if x == tt and y == tt}
    return lo, up


@dataclass
class BoundsCertificate:
    """Exhaustive scan of ``S_(a_1,a_2;b)(t)`` over unit pairs for one ``(b, t)``.

    ``lower``/``upper`` are the claimed bounds; ``observed_min``/``observed_max``
    and the ``*_attainers`` sets are what the scan found. ``predicted_*`` are
    the pairs singled out by the claimed equality conditions.
    """

    b: int
    t: int
    lower: Fraction
    upper: Fraction
    observed_min: Fraction
    observed_max: Fraction
    lower_attainers: list[tuple[int, int]] = field(default_factory=list)
    upper_attainers: list[tuple[int, int]] = field(default_factory=list)
    predicted_lower: list[tuple[int, int]] = field(default_factory=list)
    predicted_upper: list[tuple[int, int]] = field(default_factory=list)
    above_upper: list[tuple[int, int]] = field(default_factory=list)
    below_lower: list[tuple[int, int]] = field(default_factory=list)

    @property
    def bounds_hold(self) -> bool:
        return not self.above_upper and not self.below_lower

    @property
    def upper_iff_holds(self) -> bool:
        return set(self.upper_attainers) == set(self.predicted_upper)

    @property
    def lower_iff_holds(self) -> bool:
        return set(self.lower_attainers) == set(self.predicted_lower)

    @property
    def holds(self) -> bool:
        return self.bounds_hold and self.upper_iff_holds and self.lower_iff_holds


def _pair_reduced_np(a1: int, a2: int, b: int) -> np.ndarray:
    # reduced sums for all t at once: sum_k k * ((a2^-1 (-t - k a1)) mod b)
    inv = mod_inverse(a2, b)
    k = np.arange(1, b, dtype=np.int64)
    t = np.arange(b, dtype=np.int64)[:, None]
    ell = (inv * ((-t - k * a1) % b)) % b
    return (ell * k).sum(axis=1)


def bounds_2d(b: int, t: int) -> BoundsCertificate:
    """Scan all unit pairs modulo ``b`` at a fixed ``t`` against the claimed bounds."""
    if b < 2:
        raise ValueError("need b >= 2")
    lo, hi = bound_values(b, t)
    pred_lo, pred_hi = _predicted_attainers(b, t)
    values = {}
    for a1 in units(b):
        for a2 in units(b):
            values[(a1, a2)] = fd_sum(FDSpec((a1, a2), b), t)
    return _certificate(b, t, lo, hi, values, pred_lo, pred_hi)


def _certificate(b, t, lo, hi, values, pred_lo, pred_hi) -> BoundsCertificate:
    vmin, vmax = min(values.values()), max(values.values())
    return BoundsCertificate(
        b=b,
        t=t,
        lower=lo,
        upper=hi,
        observed_min=vmin,
        observed_max=vmax,
        lower_attainers=sorted(k for k, v in values.items() if v == lo),
        upper_attainers=sorted(k for k, v in values.items() if v == hi),
        predicted_lower=sorted(pred_lo),
        predicted_upper=sorted(pred_hi),
        above_upper=sorted(k for k, v in values.items() if v > hi),
        below_lower=sorted(k for k, v in values.items() if v < lo),
    )


def _certificates_for(b: int) -> list[BoundsCertificate]:
    # one pass per pair over all t, using the O(b) pair formula vectorised
    us = units(b)
    per_t: list[dict] = [dict() for _ in range(b)]
    for a1 in us:
        for a2 in us:
            red = _pair_reduced_np(a1, a2, b)
            for t in range(b):
                per_t[t][(a1, a2)] = normalize_reduced(int(red[t]), 2, b)
    out = []
    for t in range(b):
        lo, hi = bound_values(b, t)
        pred_lo, pred_hi = _predicted_attainers(b, t)
        out.append(_certificate(b, t, lo, hi, per_t[t], pred_lo, pred_hi))
    return out


def verify_bounds(max_b: int = 50, min_b: int = 2, branch: str = "all") -> VerificationReport:
    """Bounds and equality conditions for 2-dimensional sums, exhaustively.

    ``branch`` selects ``"t0"`` (``t = 0``), ``"nonzero"`` (``1 <= t <= b-1``)
    or ``"all"``. Each (b, t) contributes up to four checks: lower bound,
    upper bound, and the two equality characterisations.
    """
    if branch not in ("all", "t0", "nonzero"):
        raise ValueError(f"unknown branch {branch!r}")
    report = VerificationReport("pair_bounds", f"b in [{min_b},{max_b}], branch={branch}")
    for b in range(max(min_b, 2), max_b + 1):
        for cert in _certificates_for(b):
            is_zero = cert.t == 0
            if (branch == "t0" and not is_zero) or (branch == "nonzero" and is_zero):
                continue
            tag = "t0" if is_zero else "t_nonzero"
            p = {"b": b, "t": cert.t}
            report.check(not cert.below_lower, {**p, "part": f"{tag}:lower_bound", "pairs": cert.below_lower[:5]},
                         cert.observed_min, cert.lower)
            report.check(not cert.above_upper, {**p, "part": f"{tag}:upper_bound", "pairs": cert.above_upper[:5]},
                         cert.observed_max, cert.upper)
            report.check(cert.lower_iff_holds, {**p, "part": f"{tag}:lower_iff"},
                         cert.lower_attainers, cert.predicted_lower)
            report.check(cert.upper_iff_holds, {**p, "part": f"{tag}:upper_iff"},
                         cert.upper_attainers, cert.predicted_upper)
    return report


def dedekind_sum(a: int, b: int) -> Fraction:
    """Classical ``s(a, b) = sum_{k=1}^{b-1} ((k/b)) ((ka/b))``."""
    if b < 1:
        raise ValueError("b must be positive")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    return sum((sawtooth(Fraction(k, b)) * sawtooth(Fraction(k * a, b)) for k in range(1, b)), Fraction(0))


def verify_dedekind_corollary(max_b: int = 30) -> VerificationReport:
    """The relation of ``S_(a1,a2;b)(0)`` to ``s``, and the bounds on ``s`` with their equality cases."""
    report = VerificationReport("dedekind_sum_bounds", f"b in [2,{max_b}]")
    for b in range(2, max_b + 1):
        us = units(b)
        s = {a: dedekind_sum(a, b) for a in us}
        bound = Fraction((b - 1) * (b - 2), 12 * b)
        for a in us:
            p = {"a": a, "b": b}
            report.check(-bound <= s[a] <= bound, {**p, "part": "bound"}, s[a], bound)
            report.check((s[a] == bound) == (a % b == 1 % b), {**p, "part": "upper_iff"}, s[a], bound)
            report.check((s[a] == -bound) == (a % b == (-1) % b), {**p, "part": "lower_iff"}, s[a], -bound)
        for a1 in us:
            for a2 in us:
                lhs = fd_sum(FDSpec((a1, a2), b), 0)
                rhs = -s[(a1 * mod_inverse(a2, b)) % b] + Fraction(b - 1, 4 * b)
                report.check(lhs == rhs, {"a1": a1, "a2": a2, "b": b, "part": "relation"}, lhs, rhs)
    return report


@dataclass
class ExtremaResult:
    """Maximisers and minimisers of ``t -> S_(a,1;b)(t)`` over ``1 <= t <= b``."""

    b: int
    a: int
    argmax_set: list[int]
    argmin_set: list[int]
    max_value: Fraction
    min_value: Fraction

    @property
    def argmax_interval(self) -> tuple[Fraction, Fraction]:
        mid = Fraction(self.b + 1, 2)
        return mid, mid + self.a

    @property
    def argmin_interval(self) -> tuple[Fraction, Fraction]:
        return Fraction(1), min(Fraction(self.a), Fraction(self.b + 1, 2))

    def argmax_contained(self) -> bool:
        lo, hi = self.argmax_interval
        return all(lo <= t <= hi for t in self.argmax_set)

    def argmin_contained(self) -> bool:
        lo, hi = self.argmin_interval
        return all(lo <= t <= hi for t in self.argmin_set)


def extrema_2d(a: int, b: int) -> ExtremaResult:
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    vec = fd_vector(FDSpec((a, 1), b))
    vals = {t: vec[t % b] for t in range(1, b + 1)}
    mx, mn = max(vals.values()), min(vals.values())
    return ExtremaResult(
        b=b,
        a=a,
        argmax_set=[t for t, v in vals.items() if v == mx],
        argmin_set=[t for t, v in vals.items() if v == mn],
        max_value=mx,
        min_value=mn,
    )


def verify_extrema(max_b: int = 60) -> VerificationReport:
    """Location of maximisers and minimisers for every coprime ``a < b <= max_b``."""
    report = VerificationReport("extrema_location", f"coprime a < b <= {max_b}")
    for b in range(2, max_b + 1):
        for a in units(b):
            res = extrema_2d(a, b)
            p = {"a": a, "b": b}
            report.check(res.argmax_contained(), {**p, "part": "argmax"}, res.argmax_set, res.argmax_interval)
            report.check(res.argmin_contained(), {**p, "part": "argmin"}, res.argmin_set, res.argmin_interval)
    return report


def concavity_check(a1: int, a2: int, b: int) -> VerificationReport:
    """Discrete concavity of ``S = S_(a1,a2;b)``.

    For ``1 <= t <= b-1``: ``S(t) + S(t+a1+a2) < S(t+a1) + S(t+a2)``, and
    the reverse strict inequality at ``t = 0``. Both follow from
    ``(I - T^a1)(I - T^a2) S = S_b``.
    """
    if gcd(a1, b) != 1 or gcd(a2, b) != 1:
        raise NotCoprime(f"({a1},{a2}) not coprime to b={b}")
    report = VerificationReport("concavity", f"a=({a1},{a2}), b={b}")
    vec = fd_vector(FDSpec((a1, a2), b))
    S = lambda x: vec[x % b]  # noqa: E731
    for t in range(b):
        outer = (S(t) + S(t + a1 + a2)) / 2
        inner = (S(t + a1) + S(t + a2)) / 2
        ok = outer > inner if t == 0 else outer < inner
        report.check(ok, {"a1": a1, "a2": a2, "b": b, "t": t}, outer, inner)
    return report


def verify_concavity(max_b: int = 20) -> VerificationReport:
    report = VerificationReport("concavity", f"b in [2,{max_b}], all unit pairs")
    for b in range(2, max_b + 1):
        for a1 in units(b):
            for a2 in units(b):
                report.merge(concavity_check(a1, a2, b))
    return report


def _r_a1b_fn(a: int, b: int):
    va, vb = fd_vector(FDSpec((b, 1), a)), fd_vector(FDSpec((a, 1), b))
    return lambda t: va[t % a] + vb[t % b]


def _r_ab_fn(a: int, b: int):
    va, vb = fd_vector(FDSpec((b,), a)), fd_vector(FDSpec((a,), b))
    return lambda t: va[t % a] + vb[t % b]


def R_a1b(a: int, b: int, t: int) -> Fraction:
    """``R_{a,1,b}(t) = S_(1,b;a)(t) + S_(a,b;1)(t) + S_(a,1;b)(t)``; the modulus-1 term is 0."""
    return _r_a1b_fn(a, b)(t)


def R_ab(a: int, b: int, t: int) -> Fraction:
    """``R_{a,b}(t) = S_(b;a)(t) + S_(a;b)(t)``."""
    return _r_ab_fn(a, b)(t)


def _floor_diff(m: int, t: int, x: int, y: int) -> int:
    # number of j in [0, t) with x*m + j divisible by y
    return (m * x + t - 1) // y - (m * x - 1) // y


def r_shift_bound(
    a: int,
    b: int,
    *,
    ks: Sequence[int] = (1, 2, 3),
    ms: Sequence[int] = (0, 1, 2, 3),
    bound_only: bool = False,
) -> VerificationReport:
    """``|R_{a,1,b}(t+a+b) - R_{a,1,b}(t)| <= 1 - (1/a + 1/b)/2`` over one period ``0 <= t < ab``.

    Unless ``bound_only`` is set, the same grid also checks the ``k``-step
    shift formula for ``R_{a,b}``, the floor-difference count of integer
    points, and the resulting closed form for
    ``R_{a,1,b}(k(a+b)) - R_{a,1,b}(t + k(a+b))``.
    """
    if a < 1 or b < 1:
        raise ValueError("a, b must be positive")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    report = VerificationReport("r_shift_bound", f"a={a}, b={b}, t in [0,{a * b})")
    bound = 1 - (Fraction(1, a) + Fraction(1, b)) / 2
    period = a * b
    R3 = _r_a1b_fn(a, b)
    for t in range(period):
        diff = R3(t + a + b) - R3(t)
        report.check(abs(diff) <= bound, {"a": a, "b": b, "t": t, "part": "shift_bound"}, abs(diff), bound)
    if bound_only:
        return report
    R2 = _r_ab_fn(a, b)
    inv = Fraction(1, a) + Fraction(1, b)
    for k in ks:
        for t in range(period):
            lhs = R2(t + k * (a + b))
            rhs = R2(t) - sum(delta_z(t + j * b, a) + delta_z(t + j * a, b) for j in range(k)) + k * inv
            report.check(lhs == rhs, {"a": a, "b": b, "t": t, "k": k, "part": "kaplusb"}, lhs, rhs)
    for m in ms:
        for t in range(1, a + b + 1):
            lhs = sum(delta_z(j + m * a, b) for j in range(t))
            rhs = _floor_diff(m, t, a, b)
            report.check(lhs == rhs, {"a": a, "b": b, "t": t, "m": m, "part": "deltaz"}, lhs, rhs)
    r0 = R3(0)
    for k in ks:
        for t in range(period):
            lhs = R3(k * (a + b)) - R3(t + k * (a + b))
            floors = sum(_floor_diff(m, t, a, b) + _floor_diff(m, t, b, a) for m in range(k))
            rhs = r0 - R3(t) + t * k * inv - floors
            report.check(lhs == rhs, {"a": a, "b": b, "t": t, "k": k, "part": "eq_diff"}, lhs, rhs)
    return report


def verify_rshift(max_ab: int = 25, *, bound_only: bool = False) -> VerificationReport:
    report = VerificationReport("r_shift_bound", f"coprime a, b <= {max_ab}")
    for a in range(1, max_ab + 1):
        for b in range(1, max_ab + 1):
            if gcd(a, b) == 1:
                report.merge(r_shift_bound(a, b, ks=(1, 2), ms=(0, 1, 2), bound_only=bound_only))
    return report


def recip_quadratic(a: int, b: int, t: int, *, corrected: bool = False) -> Fraction:
    """The quadratic in ``t`` attached to ``R_{a,1,b}``.

    By default ``t^2/(2ab) - (t/2)(1/a + 1/b + 1/(ab)) + (1/12)(1/a + 1/b + 3 + 1/(ab) + a/b + b/a)``.
    ``corrected=True`` uses ``3/a + 3/b`` in the constant term, which makes
    ``R_{a,1,b}(t) = -quadratic(t)`` exact for ``1 <= t <= a+b``.
    """
    c = 3 if corrected else 1
    return (Fraction(t * t, 2 * a * b)
            - Fraction(t, 2) * (Fraction(1, a) + Fraction(1, b) + Fraction(1, a * b))
            + Fraction(1, 12) * (Fraction(c, a) + Fraction(c, b) + 3 + Fraction(1, a * b) + Fraction(a, b) + Fraction(b, a)))


def bounds_recip_corollary(a: int, b: int, *, literal: bool = False) -> VerificationReport:
    """``|R_{a,1,b}(t+a+b) + q(t)| <= 1 - (1/a + 1/b)/2`` for ``1 <= t <= a+b``.

    ``q`` is the corrected quadratic, for which ``R_{a,1,b}(t) = -q(t)`` on this
    range; that identity and the shift bound are checked as well. The same
    inequality with the uncorrected quadratic fails for many pairs (e.g.
    ``(2, 11)``); it is recorded as an observation, or checked when
    ``literal`` is set.
    """
    if a < 1 or b < 1:
        raise ValueError("a, b must be positive")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    report = VerificationReport("reciprocity_bound", f"a={a}, b={b}, t in [1,{a + b}]")
    bound = 1 - (Fraction(1, a) + Fraction(1, b)) / 2
    R3 = _r_a1b_fn(a, b)
    for t in range(1, a + b + 1):
        p = {"a": a, "b": b, "t": t}
        shifted = R3(t + a + b)
        q = recip_quadratic(a, b, t, corrected=True)
        lhs = abs(shifted + q)
        report.check(lhs <= bound, {**p, "part": "inequality"}, lhs, bound)
        r_t = R3(t)
        report.check(r_t == -q, {**p, "part": "reciprocity"}, r_t, -q)
        gap = abs(shifted - r_t)
        report.check(gap <= bound, {**p, "part": "shift_bound"}, gap, bound)
        lit = abs(shifted + recip_quadratic(a, b, t))
        if literal:
            report.check(lit <= bound, {**p, "part": "inequality_uncorrected"}, lit, bound)
        elif lit > bound:
            report.observe({**p, "part": "inequality_uncorrected"}, lit, bound, "exceeds bound")
    return report
