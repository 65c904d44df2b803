from itertools import product

import pytest

from overpartition import oracle


def brute_force_count(n, odd_only=False):
    """Count overpartitions by choosing, per part size, a multiplicity and an overline flag."""
    sizes = [k for k in range(1, n + 1) if not odd_only or k % 2]
    total = 0
    for mult in product(*[range(n // k + 1) for k in sizes]):
        if sum(k * c for k, c in zip(sizes, mult)) == n:
            total += 2 ** sum(1 for c in mult if c)
    return total


@pytest.mark.parametrize("n, expected", [(0, 1), (3, 8), (5, 24)])
def test_enumerate_values(n, expected):
    assert oracle.enumerate_overpartitions(n) == expected


@pytest.mark.parametrize("n, expected", [(0, 1), (2, 2), (3, 4)])
def test_enumerate_odd_values(n, expected):
    assert oracle.enumerate_odd(n) == expected


def test_dp_against_brute_force():
    for n in range(0, 11):
        assert oracle.enumerate_overpartitions(n) == brute_force_count(n)
        assert oracle.enumerate_odd(n) == brute_force_count(n, odd_only=True)


def test_listing_of_three():
    listed = {oracle.format_overpartition(p) for p in oracle.list_overpartitions(3)}
    assert listed == {"3", "3̅", "2+1", "2̅+1", "2+1̅", "2̅+1̅", "1+1+1", "1̅+1+1"}


def test_listing_counts():
    for n in range(0, 9):
        parts = list(oracle.list_overpartitions(n))
        assert len(parts) == len(set(parts)) == oracle.enumerate_overpartitions(n)
        for p in parts:
            assert sum(k for k, _ in p) == n
            assert all(a[0] >= b[0] for a, b in zip(p, p[1:]))


def test_series_inverse():
    assert oracle.series_inverse(0) == 1
    assert oracle.series_inverse(11) == 344


def test_series_matches_dp():
    dp = oracle.overpartition_table(200)
    inverse = oracle.theta_prefix(200).inverse().coeffs
    assert inverse == dp
    assert [oracle.series_inverse(n) for n in range(0, 201, 20)] == dp[::20]


def test_theta_prefix():
    assert oracle.theta_prefix(9).coeffs == [1, -2, 0, 0, 2, 0, 0, 0, 0, -2]


def test_inverse_times_series_is_one():
    s = oracle.theta_prefix(60)
    inv = s.inverse()
    prod = [sum(s.coeffs[j] * inv.coeffs[i - j] for j in range(i + 1)) for i in range(61)]
    assert prod == [1] + [0] * 60


def test_inverse_needs_unit():
    with pytest.raises(ValueError):
        oracle.SeriesPrefix([2, 1]).inverse()
    with pytest.raises(ValueError):
        oracle.SeriesPrefix([])


def test_oracle_convolution(dp_500):
    full, odd = dp_500
    for n in range(201):
        assert full[n] == sum(full[k] * odd[n - 2 * k] for k in range(n // 2 + 1))
