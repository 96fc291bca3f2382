import cmath
from fractions import Fraction as F
from math import gcd

import pytest

from fdsums.analysis import (
    R_a1b,
    average_all,
    average_last,
    bound_values,
    bounds_2d,
    bounds_recip_corollary,
    concavity_check,
    dedekind_sum,
    euler_phi,
    extrema_2d,
    negate_first,
    r_shift_bound,
    recip_quadratic,
    units,
    verify_avg,
    verify_bounds,
    verify_concavity,
    verify_dedekind_corollary,
    verify_extrema,
)
from fdsums.errors import BTooSmall, NotCoprime
from fdsums.fourier_dedekind import FDSpec, fd_sum, fd_vector


def test_units_and_phi():
    assert units(12) == [1, 5, 7, 11]
    assert [euler_phi(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]


def test_average_last_examples():
    assert average_last([], 3, 0) == F(1, 3)
    assert average_last([1], 5, 2) == fd_sum(FDSpec((1,), 5), 2) / 2
    assert average_last([], 4, 1) == F(-1, 8)
    assert average_last([1], 5, 2, shortcut=True) == average_last([1], 5, 2)
    with pytest.raises(BTooSmall):
        average_last([], 2, 0)
    with pytest.raises(NotCoprime):
        average_last([2], 4, 0)


@pytest.mark.parametrize("d,b,t,want", [(1, 3, 0, F(1, 3)), (2, 5, 0, F(1, 5)), (2, 5, 1, F(-1, 20))])
def test_average_all_examples(d, b, t, want):
    assert average_all(d, b, t) == want
    assert average_all(d, b, t, shortcut=True) == want


def test_average_all_sixteen_terms():
    terms = [fd_sum(FDSpec((x, y), 5), 0) for x in range(1, 5) for y in range(1, 5)]
    assert len(terms) == 16 and sum(terms) / 16 == F(1, 5)


def test_avg_grid_small():
    assert verify_avg(max_b=14, max_d=2).passed
    with pytest.raises(BTooSmall):
        average_all(1, 2, 0)


def test_negate_first_examples():
    assert negate_first(FDSpec((1,), 4), 0) == fd_sum(FDSpec((3,), 4), 0)
    assert negate_first(FDSpec((1, 3), 4), 1) == fd_sum(FDSpec((3, 3), 4), 1)
    assert negate_first(FDSpec((2,), 5), 0) == fd_sum(FDSpec((3,), 5), 0)


def test_negate_first_grid():
    for b in range(2, 13):
        for a1 in units(b):
            for a2 in units(b):
                for t in range(b):
                    assert negate_first(FDSpec((a1, a2), b), t) == fd_sum(FDSpec((b - a1, a2), b), t)


def test_bounds_t0_example():
    cert = bounds_2d(5, 0)
    assert cert.upper == F(2, 5) and cert.lower == 0
    assert cert.upper_attainers == [(1, 4), (2, 3), (3, 2), (4, 1)]
    assert cert.lower_attainers == [(1, 1), (2, 2), (3, 3), (4, 4)]
    assert cert.holds


def test_bounds_nonzero_lower_example():
    cert = bounds_2d(5, 1)
    assert cert.lower == F(-2, 5)
    assert cert.lower_attainers == [(1, 1)]
    assert cert.lower_iff_holds


def test_bounds_b2():
    cert = bounds_2d(2, 0)
    assert cert.lower == cert.upper == F(1, 8)
    assert fd_sum(FDSpec((1, 1), 2), 0) == F(1, 8)
    assert cert.holds


def test_bounds_t0_branch_and_nonzero_lower_hold():
    rep = verify_bounds(max_b=30, branch="t0")
    assert rep.passed
    rep = verify_bounds(max_b=30, branch="nonzero")
    assert not any(w.params["part"].endswith(("lower_bound", "lower_iff")) for w in rep.failures)


def test_nonzero_t_upper_bound_counterexample():
    # S_(2,2;3)(1) = 1/9 exceeds (b-1)(b-5)/(12b) = -1/9; confirmed from the root-of-unity sum
    val = fd_sum(FDSpec((2, 2), 3), 1)
    assert val == F(1, 9)
    xi = cmath.exp(2j * cmath.pi / 3)
    direct = sum(xi ** j / (1 - xi ** (2 * j)) ** 2 for j in (1, 2)) / 3
    assert abs(direct - 1 / 9) < 1e-12
    lo, hi = bound_values(3, 1)
    assert hi == F(-1, 9) and val > hi
    assert not bounds_2d(3, 1).bounds_hold
    assert fd_sum(FDSpec((7, 7), 10), 2) == F(17, 40) > bound_values(10, 2)[1]


def test_nonzero_t_upper_bound_holds_for_large_b():
    rep = verify_bounds(max_b=30, min_b=11, branch="nonzero")
    assert not any(w.params["part"].endswith("upper_bound") for w in rep.failures)


@pytest.mark.parametrize("a,b,want", [(1, 3, F(1, 18)), (1, 7, F(6 * 5, 84)), (1, 10, F(9 * 8, 120))])
def test_dedekind_sum_examples(a, b, want):
    assert dedekind_sum(a, b) == want


def test_dedekind_sum_oddness_and_errors():
    for b in range(2, 20):
        assert dedekind_sum(b - 1, b) == -dedekind_sum(1, b)
    with pytest.raises(NotCoprime):
        dedekind_sum(2, 4)


def test_dedekind_reciprocity_law():
    # classical s(a,b) + s(b,a) = (a/b + b/a + 1/(ab))/12 - 1/4 as an outside oracle
    for a in range(1, 20):
        for b in range(1, 20):
            if gcd(a, b) == 1:
                assert dedekind_sum(a, b) + dedekind_sum(b, a) == (F(a, b) + F(b, a) + F(1, a * b)) / 12 - F(1, 4)


def test_dedekind_corollary_small():
    assert verify_dedekind_corollary(max_b=15).passed


def test_extrema_examples():
    r = extrema_2d(1, 15)
    assert set(r.argmax_set) <= {8, 9} and r.argmin_set == [1]
    r = extrema_2d(7, 15)
    assert all(8 <= t <= 15 for t in r.argmax_set) and all(1 <= t <= 7 for t in r.argmin_set)
    r = extrema_2d(1, 2)
    assert r.argmax_set == [2] and r.argmin_set == [1]
    with pytest.raises(NotCoprime):
        extrema_2d(3, 6)


def test_extrema_values_attained():
    for b in range(2, 25):
        for a in units(b):
            r = extrema_2d(a, b)
            vec = fd_vector(FDSpec((a, 1), b))
            assert r.argmax_set and r.argmin_set
            assert all(vec[t % b] == r.max_value for t in r.argmax_set)
            assert all(vec[t % b] == r.min_value for t in r.argmin_set)
            assert max(vec) == r.max_value and min(vec) == r.min_value


def test_extrema_grid_small():
    assert verify_extrema(max_b=30).passed


def test_concavity_examples():
    rep = concavity_check(3, 5, 11)
    assert rep.passed
    S = fd_vector(FDSpec((3, 5), 11))
    assert (S[4] + S[6]) / 2 > (S[1] + S[9]) / 2
    assert concavity_check(1, 3, 4).passed
    assert concavity_check(1, 1, 5).passed


def test_concavity_reverse_direction_fails():
    # the opposite strict inequality fails at every t for (3,5;11)
    S = fd_vector(FDSpec((3, 5), 11))
    for t in range(1, 11):
        assert not (S[t] + S[(t + 8) % 11] > S[(t + 3) % 11] + S[(t + 5) % 11])
    assert not (S[0] + S[8] < S[3] + S[5])


def test_concavity_grid_small():
    assert verify_concavity(max_b=12).passed


def test_r_shift_examples():
    assert r_shift_bound(11, 10).passed
    rep = r_shift_bound(2, 3)
    assert rep.passed
    assert 1 - (F(1, 2) + F(1, 3)) / 2 == F(7, 12)
    assert r_shift_bound(1, 1).passed
    with pytest.raises(NotCoprime):
        r_shift_bound(2, 4)


def test_r_shift_parts_present():
    rep = r_shift_bound(5, 7)
    assert set(rep.by_part) == {"shift_bound", "kaplusb", "deltaz", "eq_diff"}


@pytest.mark.parametrize("a,b", [(64, 75), (2, 3), (1, 2), (11, 10)])
def test_bounds_recip_examples(a, b):
    assert bounds_recip_corollary(a, b).passed


def test_reciprocity_quadratic_constant_term():
    # with 1/a + 1/b in the constant term the identity R = -q is off by (1/a + 1/b)/6
    for a, b in [(2, 3), (5, 7), (11, 10)]:
        for t in range(1, a + b + 1):
            r = R_a1b(a, b, t)
            assert r == -recip_quadratic(a, b, t, corrected=True)
            gap = recip_quadratic(a, b, t, corrected=True) - recip_quadratic(a, b, t)
            assert gap == (F(1, a) + F(1, b)) / 6


def test_uncorrected_quadratic_inequality():
    assert bounds_recip_corollary(64, 75, literal=True).passed
    rep = bounds_recip_corollary(2, 11)
    assert rep.passed and rep.observations
    assert not bounds_recip_corollary(2, 11, literal=True).passed
