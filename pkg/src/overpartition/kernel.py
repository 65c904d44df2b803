"""Exact recurrence engines for the overpartition function.

Two recurrences are combined here.  The linear one,

    p̄(n) = 2 * sum_{j >= 1} (-1)^(j+1) p̄(n - j^2),

needs every earlier value.  The nonlinear one writes p̄(n) as a sum of
products p̄(k) p̄(k') whose arguments never exceed floor(n/2), with one
explicit form per residue of n mod 4.  The hybrid driver fills a table to
floor(n/2) with the first and finishes with a single step of the second.

Everything is integer arithmetic; square-root bounds included.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import FormatError, TableTooShort
from .plan import ComputePlan, Method
from .table import OverpartitionTable

__all__ = [
    "SqrtKind",
    "int_sqrt",
    "OverpartitionTable",
    "OddSeriesView",
    "StepPlan",
    "step_plan",
    "linear_extend",
    "linear_table",
    "nonlinear_value",
    "theorem_value",
    "hybrid_compute",
    "compute",
    "podd_value",
    "podd_value_symmetric",
    "check_convolution",
]


class SqrtKind(Enum):
    FLOOR = "floor"
    CEIL = "ceil"
    NEAREST = "nearest"


def int_sqrt(k: int, kind: SqrtKind = SqrtKind.FLOOR) -> int:
    """Floor, ceiling or nearest integer of sqrt(k), exactly.

    ``NEAREST`` is floor(sqrt(k) + 1/2).  With r = floor(sqrt(k)) that is r + 1
    exactly when k >= r^2 + r + 1, since (r + 1/2)^2 = r^2 + r + 1/4 and k is an
    integer; sqrt(k) is never a half-integer so there is no tie to break.
    """
    if k < 0:
        raise ValueError(f"square root of negative number {k}")
    r = math.isqrt(k)
    if kind is SqrtKind.FLOOR:
        return r
    if kind is SqrtKind.CEIL:
        return r if r * r == k else r + 1
    if kind is SqrtKind.NEAREST:
        return r + 1 if k >= r * r + r + 1 else r
    raise ValueError(f"unknown sqrt kind {kind!r}")


# ---------------------------------------------------------------------------
# Linear recurrence
# ---------------------------------------------------------------------------

def linear_extend(table: OverpartitionTable, target: int) -> OverpartitionTable:
    """Fill ``table`` in place through index ``target`` and return it."""
    values = table.values
    start = len(values)
    if target < start:
        return table
    squares = [j * j for j in range(math.isqrt(target) + 2)]
    for n in range(start, target + 1):
        top = math.isqrt(n)
        odd = sum(values[n - squares[j]] for j in range(1, top + 1, 2))
        even = sum(values[n - squares[j]] for j in range(2, top + 1, 2))
        values.append(2 * (odd - even))
    return table


def linear_table(n: int) -> OverpartitionTable:
    """A fresh table holding p̄(0..n) from the linear recurrence."""
    return linear_extend(OverpartitionTable(), n)


# ---------------------------------------------------------------------------
# Nonlinear half-index step
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StepPlan:
    """Shape of the nonlinear expansion of p̄(n), with n = 4m + residue.

    The expansion is

        4 * sum_{k < row_stop} p̄(k) * sum_{j=1}^{row_length(k)} p̄(pivot - k - gap(j))
      + 2 * sum_{k < product_stop} p̄(k) p̄(pivot - k)
      + 2 * sum_{a in square_args} p̄(a)^2
      + p̄(centre)^2                                   (residue 0 only)

    where gap(j) is 2j^2 for even n and 2j(j-1) for odd n.
    """

    n: int
    m: int
    residue: int
    pivot: int
    row_stop: int
    product_stop: int
    square_args: tuple[int, ...]
    centre: int | None

    @property
    def half(self) -> int:
        return self.n // 2

    @property
    def outer_stop(self) -> int:
        return max(self.row_stop, self.product_stop)

    def gap(self, j: int) -> int:
        return 2 * j * j if self.residue % 2 == 0 else 2 * j * (j - 1)

    def row_length(self, k: int) -> int:
        m, r = self.m, self.residue
        if r == 0:
            return int_sqrt(m - k, SqrtKind.CEIL) - 1
        if r == 1:
            return int_sqrt(m - k, SqrtKind.NEAREST)
        if r == 2:
            return int_sqrt(m - k, SqrtKind.FLOOR)
        return int_sqrt(m + 1 - k, SqrtKind.NEAREST)

    def row_args(self, k: int) -> list[int]:
        base = self.pivot - k
        return [base - self.gap(j) for j in range(1, self.row_length(k) + 1)]


def step_plan(n: int) -> StepPlan:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    m, r = divmod(n, 4)
    if r == 0:
        squares = tuple(m - j * j for j in range(1, math.isqrt(m) + 1))
        return StepPlan(n, m, r, 2 * m, max(m - 1, 0), m, squares, m)
    if r == 1:
        top = int_sqrt(m + 1, SqrtKind.NEAREST)
        squares = tuple(m - j * (j - 1) for j in range(1, top + 1))
        return StepPlan(n, m, r, 2 * m, m, 0, squares, None)
    if r == 2:
        return StepPlan(n, m, r, 2 * m + 1, m, m + 1, (), None)
    return StepPlan(n, m, r, 2 * m + 1, m + 1, 0, (), None)


def _chunk_sums(values: Sequence[int], plan: StepPlan, lo: int, hi: int) -> tuple[int, int]:
    """Row and product partial sums for outer indices lo <= k < hi."""
    gaps = [plan.gap(j) for j in range(int_sqrt(plan.m + 1, SqrtKind.NEAREST) + 2)]
    rows = 0
    for k in range(lo, min(hi, plan.row_stop)):
        base = plan.pivot - k
        length = plan.row_length(k)
        if length > 0:
            rows += values[k] * sum(values[base - gaps[j]] for j in range(1, length + 1))
    products = 0
    for k in range(lo, min(hi, plan.product_stop)):
        products += values[k] * values[plan.pivot - k]
    return rows, products


def _split_outer(plan: StepPlan, parts: int) -> list[tuple[int, int]]:
    """Cut 0..outer_stop into at most ``parts`` contiguous ranges of similar cost."""
    stop = plan.outer_stop
    if parts <= 1 or stop <= 1:
        return [(0, stop)]
    cost = [1 + (plan.row_length(k) if k < plan.row_stop else 0) for k in range(stop)]
    total = sum(cost)
    bounds, acc, lo = [], 0, 0
    for k, c in enumerate(cost):
        acc += c
        if acc * parts >= total * (len(bounds) + 1) and len(bounds) < parts - 1:
            bounds.append((lo, k + 1))
            lo = k + 1
    bounds.append((lo, stop))
    return [b for b in bounds if b[0] < b[1]]


_WORKER_VALUES: Sequence[int] = ()


def _init_worker(values: Sequence[int]) -> None:
    global _WORKER_VALUES
    _WORKER_VALUES = values


def _worker_chunk(plan: StepPlan, lo: int, hi: int) -> tuple[int, int]:
    return _chunk_sums(_WORKER_VALUES, plan, lo, hi)


def nonlinear_value(
    table: OverpartitionTable,
    n: int,
    workers: int = 1,
    use_processes: bool = False,
) -> int:
    """p̄(n) from one nonlinear step over a table covering floor(n/2).

    The outer k-sums are cut into ``workers`` contiguous ranges whose exact
    partial sums are added; with ``use_processes`` the ranges run in a process
    pool, otherwise one after another.  The table is only read.
    """
    plan = step_plan(n)
    if not table.covers(plan.half):
        raise TableTooShort(plan.half, table.max_n)
    values = table.values
    ranges = _split_outer(plan, workers)
    if use_processes and len(ranges) > 1:
        with ProcessPoolExecutor(
            max_workers=len(ranges), initializer=_init_worker, initargs=(values[: plan.half + 1],)
        ) as pool:
            futures = [pool.submit(_worker_chunk, plan, lo, hi) for lo, hi in ranges]
            partials = [f.result() for f in futures]
    else:
        partials = [_chunk_sums(values, plan, lo, hi) for lo, hi in ranges]
    rows = sum(p[0] for p in partials)
    products = sum(p[1] for p in partials)
    squares = sum(values[a] * values[a] for a in plan.square_args)
    total = 4 * rows + 2 * products + 2 * squares
    if plan.centre is not None:
        total += values[plan.centre] ** 2
    return total


def theorem_value(table: OverpartitionTable, n: int) -> int:
    """p̄(n) from the general half-index identity, summing j over all integers.

    With h = floor(n/2) the identity reads p̄(n) = sum_k sum_j p̄(k) p̄(h - k - j(2j + 1 - (-1)^n)),
    terms with a negative argument being zero.  Slower than ``nonlinear_value``
    and kept as an independent route for testing.
    """
    h = n // 2
    if not table.covers(h):
        raise TableTooShort(h, table.max_n)
    values = table.values
    sign = 1 if n % 2 == 0 else -1
    total = 0
    for k in range(h + 1):
        rest = h - k
        inner = 0
        for direction in (1, -1):
            j = 0 if direction == 1 else -1
            while True:
                arg = rest - j * (2 * j + 1 - sign)
                if arg < 0:
                    break
                inner += values[arg]
                j += direction
        total += values[k] * inner
    return total


# ---------------------------------------------------------------------------
# Drivers
# ---------------------------------------------------------------------------

def _load_cached(plan: ComputePlan) -> OverpartitionTable:
    from . import store

    if plan.cache_path is None or not plan.cache_path.exists():
        return OverpartitionTable()
    try:
        return store.load(plan.cache_path)
    except FormatError:
        if not plan.cache_fallback:
            raise
        return OverpartitionTable()


def _store_cached(plan: ComputePlan, table: OverpartitionTable, loaded_max: int) -> None:
    from . import store

    if plan.cache_path is not None and table.max_n > loaded_max:
        store.save(table, plan.cache_path)


def hybrid_compute(
    n: int,
    plan: ComputePlan | None = None,
    table: OverpartitionTable | None = None,
) -> int:
    """p̄(n): linear recurrence up to floor(n/2), then one nonlinear step.

    A caller-owned ``table`` is reused and grown in place; otherwise the table
    comes from the plan's cache file, or is built from scratch.
    """
    plan = plan or ComputePlan()
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if table is None:
        table = _load_cached(plan)
        loaded_max = table.max_n
        linear_extend(table, n // 2)
        _store_cached(plan, table, loaded_max)
    else:
        linear_extend(table, n // 2)
    use_processes = plan.workers > 1 and n >= plan.process_threshold
    return nonlinear_value(table, n, workers=plan.workers, use_processes=use_processes)


def compute(n: int, plan: ComputePlan | None = None) -> int:
    """p̄(n) by the method named in ``plan``."""
    plan = plan or ComputePlan()
    plan.check_size(n)
    if plan.method is Method.HYBRID:
        return hybrid_compute(n, plan)
    if plan.method is Method.LINEAR:
        table = _load_cached(plan)
        loaded_max = table.max_n
        linear_extend(table, n)
        _store_cached(plan, table, loaded_max)
        return table[n]
    from . import oracle

    if plan.method is Method.SERIES:
        return oracle.series_inverse(n)
    return oracle.enumerate_overpartitions(n)


# ---------------------------------------------------------------------------
# Odd-part overpartitions
# ---------------------------------------------------------------------------

class OddSeriesView:
    """Overpartitions into odd parts, derived from a table of p̄ values.

    ``view[m]`` needs the source table to cover floor(m/2).
    """

    def __init__(self, source: OverpartitionTable):
        self.source = source

    @property
    def max_m(self) -> int:
        return 2 * self.source.max_n + 1

    def __getitem__(self, m: int) -> int:
        return podd_value(self, m)


def podd_value(view: OddSeriesView | OverpartitionTable, m: int) -> int:
    """p̄ₒ(m) as a short sum of p̄ values at arguments floor(m/2) - 2k^2 or floor(m/2) - 2k(k+1)."""
    table = view.source if isinstance(view, OddSeriesView) else view
    a = m // 2
    if not table.covers(a):
        raise TableTooShort(a, table.max_n)
    values = table.values
    top = math.isqrt(a // 2)
    if m % 2 == 0:
        return values[a] + 2 * sum(values[a - 2 * k * k] for k in range(1, top + 1))
    return 2 * sum(values[a - 2 * k * (k + 1)] for k in range(top + 1) if 2 * k * (k + 1) <= a)


def podd_value_symmetric(view: OddSeriesView | OverpartitionTable, m: int) -> int:
    """p̄ₒ(m) by the two-sided sum over all integers k, without folding k and -k."""
    table = view.source if isinstance(view, OddSeriesView) else view
    a = m // 2
    if not table.covers(a):
        raise TableTooShort(a, table.max_n)
    values = table.values
    if m % 2 == 0:
        quad = lambda k: 2 * k * k  # noqa: E731
    else:
        quad = lambda k: 2 * k * (k + 1)  # noqa: E731
    bound = math.isqrt(a) + 2
    return sum(values[a - quad(k)] for k in range(-bound, bound + 1) if quad(k) <= a)


def check_convolution(table: OverpartitionTable, n: int) -> bool:
    """Whether p̄(n) = sum_k p̄(k) p̄ₒ(n - 2k) holds exactly at n."""
    if not table.covers(n):
        raise TableTooShort(n, table.max_n)
    view = OddSeriesView(table)
    rhs = sum(table[k] * podd_value(view, n - 2 * k) for k in range(n // 2 + 1))
    return rhs == table[n]
