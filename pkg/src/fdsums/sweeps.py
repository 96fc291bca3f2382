"""Grid sweeps that cross-check evaluation routes and the group structure."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import gcd
from typing import Iterator

from .fourier_dedekind import (
    FDSpec,
    fd_vector,
    fd_vector_complex,
    fd_vector_linear_comb,
    fd_vector_pair,
    gen_func_vector,
    reduced_vector,
)
from .periodic import (
    PeriodicVector,
    bareiss_det,
    check_convolution_characterization,
    constancy_check,
    constancy_direct,
    convolve,
    fd_inverse,
    fd_periodic,
    fd_system_matrix,
    fd_vector_cramer,
    multiplicities,
    prime_constancy_criterion,
)
from .report import VerificationReport

__all__ = [
    "METHODS",
    "unit_specs",
    "method_vectors",
    "verify_five_way",
    "verify_determinant",
    "verify_group",
    "verify_constancy",
]

METHODS = ("reduced", "linear", "pair", "cramer", "complex")
COMPLEX_TOL = 1e-9


def _units(b: int) -> list[int]:
    return [m for m in range(1, b) if gcd(m, b) == 1]


def unit_specs(max_b: int, max_d: int, min_b: int = 2, min_d: int = 1) -> Iterator[FDSpec]:
    """Every ordered tuple of units modulo ``b``, for ``min_d <= d <= max_d`` and ``min_b <= b <= max_b``."""
    for b in range(min_b, max_b + 1):
        us = _units(b)
        for d in range(min_d, max_d + 1):
            for a in product(us, repeat=d):
                yield FDSpec(a, b)


def method_vectors(spec: FDSpec, methods=METHODS, cramer_backend: str = "flint") -> dict[str, tuple]:
    """One period of ``S`` by each requested route; ``pair`` is skipped unless ``d == 2``."""
    out: dict[str, tuple] = {}
    for m in methods:
        if m == "reduced":
            out[m] = fd_vector(spec)
        elif m == "linear":
            out[m] = fd_vector_linear_comb(spec)
        elif m == "pair":
            if spec.d == 2:
                out[m] = fd_vector_pair(spec.a[0], spec.a[1], spec.b)
        elif m == "cramer":
            out[m] = fd_vector_cramer(spec, backend=cramer_backend)
        elif m == "complex":
            out[m] = tuple(complex(z) for z in fd_vector_complex(spec))
        else:
            raise ValueError(f"unknown method {m!r}")
    return out


def verify_five_way(max_b: int = 30, max_d: int = 3, min_b: int = 2, cramer_backend: str = "flint") -> VerificationReport:
    """All evaluation routes agree on every unit spec: exact ones exactly, the float one within ``1e-9``.

    The reduced sums are also recomputed by expanding the generating polynomial.
    """
    report = VerificationReport("five_way", f"d<={max_d}, b in [{min_b},{max_b}], all unit tuples, all t")
    for spec in unit_specs(max_b, max_d, min_b=min_b):
        vecs = method_vectors(spec, cramer_backend=cramer_backend)
        ref = vecs["reduced"]
        p = {"spec": str(spec)}
        for name in ("linear", "pair", "cramer"):
            if name in vecs:
                ok = vecs[name] == ref
                report.check(ok, {**p, "method": name}, None if ok else vecs[name], None if ok else ref)
        err = max(abs(z - float(r)) for z, r in zip(vecs["complex"], ref))
        report.check(err < COMPLEX_TOL, {**p, "method": "complex"}, err, COMPLEX_TOL)
        red = reduced_vector(spec)
        gen = gen_func_vector(spec)
        report.check(red == gen, {**p, "method": "gen_func"}, None if red == gen else gen, None if red == gen else red)
    return report


def verify_determinant(
    max_b: int = 12,
    dims: int = 3,
    samples_per: int = 10,
    noncoprime_per: int = 2,
    seed: int = 0,
) -> VerificationReport:
    """``det M = (-1)^(b-1) b^d`` on sampled unit tuples, and ``det M = 0`` when some ``a_i`` shares a factor with ``b``.

    For each ``(b, d)`` up to ``samples_per`` unit tuples are drawn (all of
    them when there are fewer), and up to ``noncoprime_per`` tuples with a
    non-unit entry. Every determinant is computed by Bareiss elimination.
    """
    rng = random.Random(seed)
    report = VerificationReport("determinant_law", f"b in [2,{max_b}], d<={dims}")
    for b in range(2, max_b + 1):
        us = _units(b)
        non = [x for x in range(1, b + 1) if gcd(x, b) != 1]
        for d in range(1, dims + 1):
            tuples = list(product(us, repeat=d))
            chosen = tuples if len(tuples) <= samples_per else rng.sample(tuples, samples_per)
            expected = (-1) ** (b - 1) * b ** d
            for a in chosen:
                det = bareiss_det(fd_system_matrix(FDSpec(a, b)).rows)
                report.check(det == expected, {"a": list(a), "b": b, "part": "coprime"}, det, expected)
            if non:
                for _ in range(noncoprime_per):
                    a = [rng.choice(range(1, b + 1)) for _ in range(d)]
                    a[rng.randrange(d)] = rng.choice(non)
                    det = bareiss_det(fd_system_matrix(FDSpec(tuple(a), b), allow_noncoprime=True).rows)
                    report.check(det == 0, {"a": a, "b": b, "part": "noncoprime"}, det, 0)
    return report


def _random_zero_mean(b: int, rng: random.Random) -> PeriodicVector:
    vals = [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(b - 1)]
    vals.append(-sum(vals, Fraction(0)))
    return PeriodicVector(b, tuple(vals))


def verify_group(max_b: int = 12, dims: int = 2, trials: int = 3, seed: int = 0) -> VerificationReport:
    """Group laws of the Fourier-Dedekind sums under convolution, exactly, for ``2 <= b <= max_b``.

    Checks the identity ``S_b``, the inverse ``(I - T^a_1)...(I - T^a_d) delta``,
    commutativity and associativity on one-dimensional generators, the
    product rule ``S_(a;b) * S_(c;b) = S_(a,c;b)``, and the convolution
    characterisation against random zero-mean vectors.
    """
    rng = random.Random(seed)
    report = VerificationReport("group", f"b in [2,{max_b}], d<={dims}")
    for b in range(2, max_b + 1):
        us = _units(b)
        ident = PeriodicVector.identity(b)
        gens = {a: fd_periodic(FDSpec((a,), b)) for a in us}
        for d in range(0, dims + 1):
            for a in product(us, repeat=d):
                spec = FDSpec(a, b)
                f = fd_periodic(spec)
                p = {"a": list(a), "b": b}
                got = convolve(ident, f)
                report.check(got == f, {**p, "part": "identity"}, got.samples, f.samples)
                got = convolve(f, fd_inverse(spec))
                report.check(got == ident, {**p, "part": "inverse"}, got.samples, ident.samples)
                for _ in range(trials):
                    g = _random_zero_mean(b, rng)
                    ok = check_convolution_characterization(a, f, g)
                    report.check(ok, {**p, "part": "characterization", "g": [str(x) for x in g.samples]}, ok, True)
        for x, y in product(us, repeat=2):
            fx, fy = gens[x], gens[y]
            xy, yx = convolve(fx, fy), convolve(fy, fx)
            report.check(xy == yx, {"a": [x, y], "b": b, "part": "commutative"}, xy.samples, yx.samples)
            target = fd_periodic(FDSpec((x, y), b))
            report.check(xy == target, {"a": [x, y], "b": b, "part": "product"}, xy.samples, target.samples)
        for x, y, z in combinations_with_replacement(us, 3):
            lhs = convolve(convolve(gens[x], gens[y]), gens[z])
            rhs = convolve(gens[x], convolve(gens[y], gens[z]))
            report.check(lhs == rhs, {"a": [x, y, z], "b": b, "part": "associative"}, lhs.samples, rhs.samples)
    return report


def verify_constancy(primes=(3, 5, 7), max_multisets: int = 5000, seed: int = 0) -> VerificationReport:
    """Multiplicity criterion, polynomial criterion and direct evaluation agree on constancy of ``S`` off 0.

    Multisets of nonzero residues modulo ``p`` of size ``p-1`` and ``2(p-1)``
    are enumerated; if there are more than ``max_multisets`` of a size a
    seeded sample of that many is used.
    """
    rng = random.Random(seed)
    report = VerificationReport("constancy", f"p in {list(primes)}, d in {{p-1, 2(p-1)}}")
    for p in primes:
        residues = range(1, p)
        for d in (p - 1, 2 * (p - 1)):
            pool = list(combinations_with_replacement(residues, d))
            if len(pool) > max_multisets:
                pool = rng.sample(pool, max_multisets)
            for a in pool:
                spec = FDSpec(a, p)
                crit = prime_constancy_criterion(multiplicities(a, p), p)
                poly = constancy_check(spec)
                direct = constancy_direct(spec)
                report.check(crit == poly == direct, {"a": list(a), "p": p},
                             {"criterion": crit, "polynomial": poly}, direct)
    return report
