import random
from fractions import Fraction as F
from itertools import combinations_with_replacement, permutations, product
from math import gcd, lcm

import pytest

from fdsums.errors import NotCoprime, NotPrime, NotZeroMean, PeriodMismatch
from fdsums.fourier_dedekind import FDSpec, fd_sum, fd_vector
from fdsums.periodic import (
    PeriodicVector,
    bareiss_det,
    check_convolution_characterization,
    constancy_check,
    constancy_direct,
    constancy_remainder,
    convolve,
    difference_op,
    fd_inverse,
    fd_periodic,
    fd_sum_cramer,
    fd_system_matrix,
    fd_vector_cramer,
    multiplicities,
    prime_constancy_criterion,
    shift,
    sum_of_shifts,
)

S134 = PeriodicVector(4, (F(5, 16), F(-1, 16), F(-3, 16), F(-1, 16)))


def units(b):
    return [m for m in range(1, b) if gcd(m, b) == 1]


def gauss_det(rows):
    # plain elimination over Fractions, used as an oracle
    m = [[F(x) for x in r] for r in rows]
    n = len(m)
    det = F(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return F(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return det


def test_identity_idempotent():
    s4 = PeriodicVector.identity(4)
    assert s4.samples == (F(3, 4), F(-1, 4), F(-1, 4), F(-1, 4))
    assert convolve(s4, s4) == s4


def test_product_of_one_dimensional_sums():
    assert convolve(fd_periodic(FDSpec((1,), 4)), fd_periodic(FDSpec((3,), 4))) == S134


def test_identity_on_zero_mean():
    rng = random.Random(1)
    ident = PeriodicVector.identity(5)
    for _ in range(20):
        vals = [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)]
        f = PeriodicVector(5, tuple(vals + [-sum(vals)]))
        assert convolve(f, ident) == f


def test_convolve_period_mismatch():
    with pytest.raises(PeriodMismatch):
        convolve(PeriodicVector.identity(3), PeriodicVector.identity(4))


def test_shift_examples():
    f = PeriodicVector(4, (1, 2, 3, 4))
    assert shift(f, 1).samples == (2, 3, 4, 1)
    assert shift(f, 0) == f
    assert shift(f, 4) == f
    assert shift(f, -1).samples == (4, 1, 2, 3)


def test_difference_op_examples():
    assert difference_op(S134, [3]) == fd_periodic(FDSpec((1,), 4))
    assert difference_op(S134, [1, 3]) == PeriodicVector.identity(4)
    assert difference_op(S134, []) == S134


def test_functional_equation_grid():
    for b in range(2, 21):
        us = units(b)
        for d in (1, 2, 3):
            tuples = list(product(us, repeat=d))
            if len(tuples) > 40:
                tuples = random.Random(b * 10 + d).sample(tuples, 40)
            for a in tuples:
                full = fd_periodic(FDSpec(a, b))
                assert difference_op(full, [a[-1]]) == fd_periodic(FDSpec(a[:-1], b))


def test_difference_op_order_independent():
    f = PeriodicVector(7, tuple(F(i * i, 3) for i in range(7)))
    base = difference_op(f, [1, 2, 5])
    for perm in permutations([1, 2, 5]):
        assert difference_op(f, list(perm)) == base


def test_fd_inverse_examples():
    assert fd_inverse(FDSpec((1,), 4)).samples == (1, 0, 0, -1)
    assert convolve(S134, fd_inverse(FDSpec((1, 3), 4))) == PeriodicVector.identity(4)
    assert fd_inverse(FDSpec((), 6)) == PeriodicVector.delta(6)
    with pytest.raises(NotCoprime):
        fd_inverse(FDSpec((2,), 4))


def test_characterization_examples():
    g = PeriodicVector.basis(4, 0) - PeriodicVector.basis(4, 1)
    assert check_convolution_characterization([1, 3], S134, g)
    assert not check_convolution_characterization([1], fd_periodic(FDSpec((3,), 4)), PeriodicVector.identity(4))
    s5 = PeriodicVector.identity(5)
    assert check_convolution_characterization([], s5, s5)
    with pytest.raises(NotZeroMean):
        check_convolution_characterization([1], S134, PeriodicVector.delta(4))
    with pytest.raises(PeriodMismatch):
        check_convolution_characterization([1], S134, s5)


def test_characterization_rejects_other_f():
    # for a fixed zero-mean g, a perturbed f fails
    g = PeriodicVector.identity(7)
    f = fd_periodic(FDSpec((2, 3), 7))
    assert check_convolution_characterization([2, 3], f, g)
    bump = PeriodicVector.basis(7, 1) - PeriodicVector.basis(7, 2)
    assert not check_convolution_characterization([2, 3], f + bump.scale(F(1, 7)), g)


def test_lcm_identity():
    rng = random.Random(3)
    for _ in range(30):
        b = rng.randint(3, 15)
        us = units(b)
        a = tuple(rng.choice(us) for _ in range(3))
        for i, j in [(0, 1), (1, 2), (0, 2)]:
            L = lcm(a[i], a[j])
            wo_i = FDSpec(a[:i] + a[i + 1:], b)
            wo_j = FDSpec(a[:j] + a[j + 1:], b)
            for t in range(b):
                lhs = sum(fd_sum(wo_i, t + k * a[i]) for k in range(L // a[i]))
                rhs = sum(fd_sum(wo_j, t + k * a[j]) for k in range(L // a[j]))
                assert lhs == rhs


def test_sum_of_shifts_kills_zero_mean():
    for b in range(2, 10):
        for a in units(b):
            f = fd_periodic(FDSpec((a, 1), b))
            assert sum_of_shifts(f) == PeriodicVector(b, (F(0),) * b)


def test_system_matrix_worked_example():
    m = fd_system_matrix(FDSpec((1, 3), 4))
    assert m.as_lists() == [[-1, 2, -1, 0], [0, -1, 2, -1], [-1, 0, -1, 2], [1, 1, 1, 1]]
    assert m.det() == -16
    m2 = fd_system_matrix(FDSpec((1,), 2))
    assert m2.n == 2 and m2.det() == -2


def test_system_matrix_solves_for_s():
    for b in range(2, 9):
        for a in product(units(b), repeat=2):
            m = fd_system_matrix(FDSpec(a, b)).as_lists()
            s = fd_vector(FDSpec(a, b))
            rhs = [sum(F(x) * y for x, y in zip(row, s)) for row in m]
            assert rhs == [F(-1, b)] * (b - 1) + [0]


def test_bareiss_against_elimination():
    rng = random.Random(7)
    for n in range(1, 8):
        for _ in range(20):
            rows = [[F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
            assert bareiss_det(rows) == gauss_det(rows)
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[1, 2], [2, 4]]) == 0


def test_determinant_law_small():
    for b in range(2, 9):
        for d in (1, 2, 3):
            for a in list(product(units(b), repeat=d))[:6]:
                assert fd_system_matrix(FDSpec(a, b)).det() == (-1) ** (b - 1) * b ** d
        for a in [(b,), (1, b), (2, b * 2)]:
            if any(gcd(x, b) != 1 for x in a):
                assert fd_system_matrix(FDSpec(a, b), allow_noncoprime=True).det() == 0
    with pytest.raises(NotCoprime):
        fd_system_matrix(FDSpec((2,), 4))


@pytest.mark.parametrize("a,b,t,want", [((1, 3), 4, 0, F(5, 16)), ((1, 3), 4, 2, F(-3, 16)), ((2,), 5, 0, F(2, 5))])
def test_cramer_examples(a, b, t, want):
    assert fd_sum_cramer(FDSpec(a, b), t) == want


def test_cramer_backends_agree():
    for b in range(2, 11):
        for a in list(product(units(b), repeat=2))[:5]:
            spec = FDSpec(a, b)
            v = fd_vector(spec)
            assert fd_vector_cramer(spec, "bareiss") == v
            assert fd_vector_cramer(spec, "flint") == v
    with pytest.raises(ValueError):
        fd_vector_cramer(FDSpec((1,), 3), "nope")


@pytest.mark.parametrize("a,b,want", [((1, 2), 3, True), ((1,), 4, False), ((1, 2, 3, 4), 5, True), ((1, 1), 3, False)])
def test_constancy_examples(a, b, want):
    spec = FDSpec(a, b)
    assert constancy_check(spec) is want
    assert constancy_direct(spec) is want


def test_constancy_composite_moduli():
    for b in (4, 6, 8, 9, 10):
        for d in (1, 2, 3):
            for a in combinations_with_replacement(units(b), d):
                spec = FDSpec(a, b)
                assert constancy_check(spec) == constancy_direct(spec)


def test_constancy_remainder_shape():
    assert constancy_remainder([1, 2], 3) == [3, 0]


@pytest.mark.parametrize("e,p,want", [((1, 1), 3, True), ((2, 0), 3, False), ((1, 1, 1, 1), 5, True)])
def test_prime_criterion_examples(e, p, want):
    assert prime_constancy_criterion(list(e), p) is want


def test_prime_criterion_validation():
    with pytest.raises(NotPrime):
        prime_constancy_criterion([1, 1, 1], 4)
    with pytest.raises(ValueError):
        prime_constancy_criterion([1], 3)
    assert multiplicities([1, 4, 6], 5) == [2, 0, 0, 1]
    with pytest.raises(NotCoprime):
        multiplicities([5], 5)


def test_prime_criterion_matches_direct_small():
    for p in (3, 5, 7):
        for d in range(1, 2 * (p - 1) + 1):
            if p == 7 and d > 6:
                break
            for a in combinations_with_replacement(range(1, p), d):
                assert prime_constancy_criterion(multiplicities(a, p), p) == constancy_direct(FDSpec(a, p))
