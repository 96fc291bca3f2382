import random
from fractions import Fraction as F
from itertools import combinations_with_replacement, product
from math import factorial, gcd, prod

import pytest

from fdsums.errors import NonIntegerResult, NotCoprime, NotPairwiseCoprime
from fdsums.exact import delta_z
from fdsums.fourier_dedekind import FDSpec, fd_sum
from fdsums.reciprocity import (
    TriangleSpec,
    lattice_count_brute,
    lattice_count_formula,
    pairwise_coprime,
    pie_negation,
    pie_shift,
    poly_coefficients,
    poly_homogeneity_form,
    poly_negated_closed_form,
    poly_negation_pie,
    poly_part,
    rademacher_range,
    reciprocal_sum_R,
    restricted_partition,
    rpie_negation,
    rpie_shift,
    verify_lattice_grid,
    verify_pie_grid,
    verify_rademacher_extended,
    verify_rademacher_grid,
)


def coprime_sets(max_a, size):
    for a in combinations_with_replacement(range(1, max_a + 1), size):
        if pairwise_coprime(a):
            yield a


def test_poly_examples():
    for a1 in range(1, 8):
        assert poly_part([a1], F(3, 7)) == F(1, a1)
    for a1, a2 in [(2, 3), (3, 5), (1, 4), (7, 9)]:
        for t in (F(0), F(1), F(-5, 2)):
            assert poly_part([a1, a2], t) == t / (a1 * a2) + F(1, 2) * (F(1, a1) + F(1, a2))
    assert poly_part([2, 3], 0) == F(5, 12)


def test_poly_leading_coefficient():
    for a in coprime_sets(7, 4):
        c = poly_coefficients(a)
        assert c.degree == 3
        assert c.coeffs[0] == F(1, prod(a) * factorial(3))


def test_poly_rejects_non_coprime():
    with pytest.raises(NotPairwiseCoprime):
        poly_part([2, 4], 0)


@pytest.mark.parametrize("a,n,want", [([1], 5, 1), ([1, 2], 4, 3), ([2, 3], 1, 0)])
def test_restricted_partition_examples(a, n, want):
    assert restricted_partition(a, n) == want


def test_restricted_partition_enumeration():
    for a in [(1, 2, 3), (2, 5), (3, 4, 7)]:
        for n in range(0, 30):
            ranges = [range(n // x + 1) for x in a]
            want = sum(1 for ms in product(*ranges) if sum(m * x for m, x in zip(ms, a)) == n)
            assert restricted_partition(a, n) == want


def test_partition_splits_into_poly_and_reciprocal_sum():
    # p_A(n) = poly_A(n) + R_A(-n) for n >= 0
    for d in (1, 2, 3):
        for a in coprime_sets(7, d):
            for n in range(0, 40):
                assert restricted_partition(a, n) == poly_part(a, n) + reciprocal_sum_R(a, -n)


def test_reciprocal_sum_examples():
    assert reciprocal_sum_R([2, 3], 1) == F(-1, 4)
    for a in range(1, 9):
        for t in range(-5, 6):
            assert reciprocal_sum_R([a], t) == delta_z(t, a) - F(1, a)


def test_reciprocal_sum_at_zero_closed_form():
    for a in range(1, 12):
        for b in range(1, 12):
            if gcd(a, b) != 1:
                continue
            want = 1 - F(1, 4) * (1 + F(1, a) + F(1, b)) - F(1, 12) * (F(a, b) + F(b, a) + F(1, a * b))
            assert reciprocal_sum_R([a, 1, b], 0) == want


def test_pie_examples():
    s = FDSpec((1, 3), 4)
    assert pie_negation(s, 1) == F(-1, 16)
    assert pie_shift(s, 0) == F(5, 16)
    assert pie_shift(FDSpec((1,), 4), 0) == fd_sum(FDSpec((1,), 4), 1)
    assert pie_negation(FDSpec((2, 3), 5), 2) == fd_sum(FDSpec((2, 3), 5), -2)
    assert pie_shift(FDSpec((2, 3), 7), 1) == fd_sum(FDSpec((2, 3), 7), 6)
    for a in range(1, 6):
        if gcd(a, 6) == 1:
            assert pie_negation(FDSpec((a,), 6), 0) == fd_sum(FDSpec((a,), 6), 0)
    with pytest.raises(NotCoprime):
        pie_negation(FDSpec((2,), 4), 0)


def test_pie_grid():
    report = verify_pie_grid(max_b=12, dims=3)
    assert report.passed, report.failures[:3]


def test_reciprocal_pie_identities():
    rng = random.Random(5)
    triples = list(coprime_sets(9, 3))
    for a in rng.sample(triples, 12) + [(1, 2, 3), (2, 3, 5)]:
        s = sum(a)
        for t in range(-2 * s, 2 * s + 1):
            assert rpie_negation(a, t) == reciprocal_sum_R(a, -t)
            assert rpie_shift(a, t) == reciprocal_sum_R(a, t + s)
    for a in (2, 5, 7):
        for t in range(-10, 10):
            assert rpie_shift([a], t) == reciprocal_sum_R([a], t + a)


def test_poly_negation_examples():
    for a1 in range(1, 6):
        assert poly_negation_pie([a1], F(2, 3)) == F(-1, a1)
    for a1, a2 in [(2, 3), (3, 4), (5, 7)]:
        for t in (F(0), F(1), F(7, 3)):
            assert poly_negation_pie([a1, a2], t) == t / (a1 * a2) - F(1, 2) * (F(1, a1) + F(1, a2))
    assert poly_negation_pie([2, 3], 1) == F(-1, 4)


def test_poly_negation_closed_forms():
    pts = [F(0), F(1), F(-3, 2), F(5, 7), F(11)]
    for d in (1, 2, 3, 4):
        for a in list(coprime_sets(7, d))[:25]:
            for t in pts:
                lhs = poly_negation_pie(a, t)
                assert lhs == poly_negated_closed_form(a, t)
                assert lhs == poly_homogeneity_form(a, t)
                assert lhs == poly_part([-x for x in a], t)


def test_homogeneity_needs_sign_flip():
    # poly_{-a}(t) is -poly_a(-t); dropping the minus sign fails already for one part
    assert poly_negation_pie([3], 0) != poly_part([3], 0)


def test_rademacher_ranges():
    assert rademacher_range([2, 3], 1) == "ii"
    assert rademacher_range([3, 4, 5], -1) == "i"
    assert rademacher_range([2, 3], 6) == "iii"
    assert rademacher_range([2, 3], 0) is None
    assert rademacher_range([2, 3], 5) is None


@pytest.mark.parametrize("a,n", [([2, 3], 1), ([3, 4, 5], -1), ([2, 3], 6)])
def test_rademacher_examples(a, n):
    rep = verify_rademacher_extended(a, n)
    assert rep.passed and rep.checked == 1


def test_rademacher_out_of_range_is_observed_not_checked():
    rep = verify_rademacher_extended([2, 3], 0)
    assert rep.checked == 0 and len(rep.observations) == 1
    with pytest.raises(NotPairwiseCoprime):
        verify_rademacher_extended([2, 4], 1)


def test_rademacher_grid_small():
    assert verify_rademacher_grid(max_a=7, dims=2).passed
    rep = verify_rademacher_grid(max_a=6, dims=3, include_outside=True)
    assert rep.passed and rep.observations


@pytest.mark.parametrize("e,f,r,t,want", [(1, 1, 1, 3, 10), (2, 3, 1, 0, 1), (2, 3, 6, 1, 7)])
def test_lattice_examples(e, f, r, t, want):
    tri = TriangleSpec(e, f, r)
    assert lattice_count_formula(tri, t) == want
    assert lattice_count_brute(tri, t) == want


def test_lattice_brute_against_enumeration():
    for e, f, r in [(2, 3, 5), (3, 5, 7), (1, 4, 2)]:
        for t in range(4):
            n = t * r
            want = sum(1 for x in range(n + 1) for y in range(n + 1) if e * x + f * y <= n)
            assert lattice_count_brute(TriangleSpec(e, f, r), t) == want


def test_lattice_validation():
    with pytest.raises(NotCoprime):
        TriangleSpec(2, 4, 1)
    with pytest.raises(ValueError):
        TriangleSpec(0, 1, 1)
    with pytest.raises(ValueError):
        lattice_count_formula(TriangleSpec(1, 1, 1), -1)
    assert issubclass(NonIntegerResult, ValueError)


def test_lattice_grid_small():
    assert verify_lattice_grid(max_ef=5, max_t=3).passed
