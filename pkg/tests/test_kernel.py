import math

import pytest
from hypothesis import given, settings, strategies as st

from overpartition import oracle
from overpartition.errors import TableTooShort
from overpartition.kernel import (
    OddSeriesView,
    OverpartitionTable,
    SqrtKind,
    check_convolution,
    hybrid_compute,
    int_sqrt,
    linear_extend,
    linear_table,
    nonlinear_value,
    podd_value,
    podd_value_symmetric,
    step_plan,
    theorem_value,
)
from overpartition.plan import ComputePlan


def brute_sqrt(k):
    r = 0
    while (r + 1) * (r + 1) <= k:
        r += 1
    return r


class TestIntSqrt:
    def test_zero(self):
        assert int_sqrt(0, SqrtKind.FLOOR) == 0
        assert int_sqrt(0, SqrtKind.CEIL) == 0
        assert int_sqrt(0, SqrtKind.NEAREST) == 0

    def test_nearest_small(self):
        assert int_sqrt(3, SqrtKind.NEAREST) == 2
        assert int_sqrt(2, SqrtKind.NEAREST) == 1

    def test_ceil_scan(self):
        for k in range(1, 10_001):
            r = brute_sqrt(k) if k < 200 else math.isqrt(k)
            assert int_sqrt(k, SqrtKind.CEIL) == r + (0 if r * r == k else 1)

    def test_floor_against_scan(self):
        for k in range(0, 2000):
            assert int_sqrt(k) == brute_sqrt(k)

    @given(st.integers(min_value=0, max_value=10**40))
    def test_nearest_is_floor_of_x_plus_half(self, k):
        # r - 1/2 <= sqrt(k) < r + 1/2, squared and scaled by 4
        r = int_sqrt(k, SqrtKind.NEAREST)
        assert max(2 * r - 1, 0) ** 2 <= 4 * k < (2 * r + 1) ** 2

    def test_negative(self):
        with pytest.raises(ValueError):
            int_sqrt(-1)


class TestLinear:
    def test_first_values(self):
        assert linear_table(3).values == [1, 2, 4, 8]
        t = linear_table(5)
        assert t[4] == 2 * (t[3] - t[0]) == 14
        assert t[5] == 2 * (t[4] - t[1]) == 24

    def test_extend_keeps_prefix(self):
        t = linear_table(50)
        before = list(t.values)
        linear_extend(t, 120)
        assert t.values[:51] == before
        assert t.max_n == 120
        linear_extend(t, 10)
        assert t.max_n == 120

    def test_against_enumeration(self):
        assert linear_table(200).values == oracle.overpartition_table(200)

    def test_table_properties(self, table_2000):
        v = table_2000.values
        assert v[0] == 1
        assert all(x % 2 == 0 for x in v[1:])
        assert all(a < b for a, b in zip(v, v[1:]))


class TestNonlinear:
    def test_eleven(self):
        t = linear_table(5)
        p = t.values
        assert nonlinear_value(t, 11) == 4 * (p[0] * (p[5] + p[1]) + p[1] * p[4] + p[2] * p[3]) == 344

    def test_one_from_base(self):
        assert nonlinear_value(OverpartitionTable(), 1) == 2

    def test_four(self):
        t = OverpartitionTable([1, 2, 4])
        assert nonlinear_value(t, 4) == 2 * 1 * 4 + 2 * 1 + 2 * 2 == 14

    def test_sweep(self):
        t = linear_table(400)
        for n in range(401):
            assert nonlinear_value(t, n) == t[n]

    def test_general_form_matches(self):
        t = linear_table(400)
        for n in range(401):
            assert theorem_value(t, n) == nonlinear_value(t, n)

    def test_too_short(self):
        t = linear_table(4)
        with pytest.raises(TableTooShort):
            nonlinear_value(t, 10)
        with pytest.raises(TableTooShort):
            theorem_value(t, 10)

    def test_arguments_stay_in_half_range(self):
        for n in range(0, 600):
            plan = step_plan(n)
            args = [a for k in range(plan.row_stop) for a in plan.row_args(k)]
            args += list(range(plan.outer_stop)) + list(plan.square_args)
            args += [plan.pivot - k for k in range(plan.product_stop)]
            assert all(0 <= a <= n // 2 for a in args), n

    def test_does_not_write_table(self):
        t = linear_table(60)
        snapshot = list(t.values)
        nonlinear_value(t, 121, workers=3)
        assert t.values == snapshot


class TestHybrid:
    def test_values(self):
        assert hybrid_compute(11) == 344
        assert hybrid_compute(0) == 1

    def test_table_exactly_half(self):
        t = OverpartitionTable()
        assert hybrid_compute(11, table=t) == 344
        assert t.max_n == 5

    @pytest.mark.parametrize("workers", [1, 2, 8])
    def test_workers_n2000(self, workers, table_2000):
        assert hybrid_compute(2000, ComputePlan(workers=workers)) == table_2000[2000]

    def test_process_pool(self, table_2000):
        plan = ComputePlan(workers=3, process_threshold=0)
        for n in (1997, 1998, 1999, 2000):
            assert hybrid_compute(n, plan) == table_2000[n]

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=0, max_value=2000), st.integers(min_value=1, max_value=16))
    def test_any_worker_count(self, table_2000, n, workers):
        assert nonlinear_value(table_2000, n, workers=workers) == table_2000[n]


class TestOddParts:
    def test_small(self):
        view = OddSeriesView(linear_table(2))
        assert podd_value(view, 0) == 1
        assert podd_value(view, 2) == 2
        assert podd_value(view, 3) == 4
        assert view[3] == 4

    def test_against_dp(self, dp_500):
        _, odd = dp_500
        view = OddSeriesView(linear_table(250))
        for m in range(501):
            assert podd_value(view, m) == odd[m]

    def test_symmetric_form(self):
        view = OddSeriesView(linear_table(250))
        for m in range(501):
            assert podd_value_symmetric(view, m) == podd_value(view, m)

    def test_parity(self):
        view = OddSeriesView(linear_table(250))
        assert all(podd_value(view, m) % 2 == 0 for m in range(1, 501))

    def test_too_short(self):
        with pytest.raises(TableTooShort):
            podd_value(OddSeriesView(linear_table(3)), 10)


class TestConvolution:
    def test_three(self):
        t = linear_table(3)
        assert podd_value(t, 3) + t[1] * podd_value(t, 1) == 8
        assert check_convolution(t, 3)

    def test_zero(self):
        assert check_convolution(OverpartitionTable(), 0)

    def test_sweep(self):
        t = linear_table(500)
        assert all(check_convolution(t, n) for n in range(501))

    def test_detects_wrong_value(self):
        t = linear_table(20)
        bad = OverpartitionTable(t.values[:20] + [t[20] + 2])
        assert not check_convolution(bad, 20)

    def test_needs_coverage(self):
        with pytest.raises(TableTooShort):
            check_convolution(linear_table(5), 9)
