"""Verification suites run by ``overpartition selftest``.

Each suite takes an upper bound and returns a :class:`SuiteResult`; a suite
stops at its first failure and reports it.
"""
from __future__ import annotations

import math
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import mpmath

from . import oracle, store
from .errors import FormatError
from .kernel import (
    OddSeriesView,
    SqrtKind,
    check_convolution,
    hybrid_compute,
    int_sqrt,
    linear_table,
    nonlinear_value,
    podd_value,
    podd_value_symmetric,
    theorem_value,
)
from .metrics import PUBLISHED_TABLES, m1, m2_closed_form_4n, m2_instrumented
from .plan import ComputePlan

ORACLE_CAP = 1000


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


def cross_method(max_n: int) -> SuiteResult:
    table = linear_table(max_n)
    for n in range(max_n + 1):
        if nonlinear_value(table, n) != table[n]:
            return SuiteResult("cross-method", False, f"nonlinear step differs at n={n}")
        for workers in (1, 2, 8):
            if hybrid_compute(n, ComputePlan(workers=workers)) != table[n]:
                return SuiteResult("cross-method", False, f"hybrid(workers={workers}) differs at n={n}")
    return SuiteResult("cross-method", True, f"linear = nonlinear = hybrid for n <= {max_n}")


def oracles(max_n: int) -> SuiteResult:
    bound = min(max_n, ORACLE_CAP)
    table = linear_table(bound)
    dp = oracle.overpartition_table(bound)
    inverse = oracle.theta_prefix(bound).inverse().coeffs
    for n in range(bound + 1):
        if not (table[n] == dp[n] == inverse[n]):
            return SuiteResult("oracle", False, f"kernel/DP/series disagree at n={n}")
    return SuiteResult("oracle", True, f"kernel = DP enumeration = theta inverse for n <= {bound}")


def lemmas(max_n: int) -> SuiteResult:
    table = linear_table(max_n)
    view = OddSeriesView(table)
    odd = oracle.overpartition_table(min(max_n, ORACLE_CAP), odd_only=True)
    for m in range(max_n + 1):
        value = podd_value(view, m)
        if value != podd_value_symmetric(view, m):
            return SuiteResult("lemmas", False, f"odd-part forms disagree at m={m}")
        if m < len(odd) and value != odd[m]:
            return SuiteResult("lemmas", False, f"odd-part value differs from DP at m={m}")
    for n in range(max_n + 1):
        if not check_convolution(table, n):
            return SuiteResult("lemmas", False, f"convolution fails at n={n}")
        if theorem_value(table, n) != table[n]:
            return SuiteResult("lemmas", False, f"general j-sum differs at n={n}")
    return SuiteResult("lemmas", True, f"odd-part, convolution and general forms hold for n <= {max_n}")


def parity(max_n: int) -> SuiteResult:
    table = linear_table(max_n)
    view = OddSeriesView(table)
    for n in range(1, max_n + 1):
        if table[n] % 2 or podd_value(view, n) % 2:
            return SuiteResult("parity", False, f"odd value at n={n}")
    return SuiteResult("parity", True, f"p̄ and p̄ₒ even for 1 <= n <= {max_n}")


def table_cells(max_n: int) -> SuiteResult:
    cells = 0
    for rows in PUBLISHED_TABLES.values():
        for n, a, b, ratio in rows:
            report = m2_instrumented(n)
            if (report.m1, report.m2, report.ratio_str) != (a, b, ratio):
                return SuiteResult("table-cells", False, f"n={n}: got {report.as_record()}")
            cells += 3
    for m in range(1, max(1, max_n // 4) + 1):
        if m2_closed_form_4n(m) != m2_instrumented(4 * m).m2:
            return SuiteResult("table-cells", False, f"closed form differs at m={m}")
    return SuiteResult("table-cells", True, f"{cells} published cells, closed form for 4m <= {max(4, max_n)}")


def term_count_chain(max_n: int) -> str | None:
    """floor(sqrt(4n+3)) <= sum_{k<=n+1} [sqrt k] < n + 1 + sum_{k<=n} floor(sqrt k)."""
    nearest = int_sqrt(1, SqrtKind.NEAREST)
    floors = 0
    for n in range(1, max_n + 1):
        nearest += int_sqrt(n + 1, SqrtKind.NEAREST)
        floors += math.isqrt(n)
        if not (math.isqrt(4 * n + 3) <= nearest < n + 1 + floors):
            return f"term-count chain fails at n={n}"
    return None


def sqrt_sum_bounds(max_n: int, digits: int = 40) -> str | None:
    """Lower and upper bounds on sum_{k<=n} sqrt(k), in mpmath."""
    with mpmath.workdps(digits):
        total = mpmath.mpf(0)
        for n in range(1, max_n + 1):
            total += mpmath.sqrt(n)
            root = mpmath.sqrt(n + 1)
            lower = (mpmath.mpf(2 * n) / 3 + mpmath.mpf(1) / 8 - 1 / (8 * root)) * root
            upper = (mpmath.mpf(2 * n) / 3 + mpmath.mpf(1) / 6 - 1 / (6 * root)) * root
            if not (lower < total < upper):
                return f"square-root sum bounds fail at n={n}"
    return None


def m1_sandwich(max_m: int, digits: int = 40) -> str | None:
    """sum_{k<=4m} sqrt(k) - 4m < M1(4m) <= sum_{k<=4m} sqrt(k), plus the matching M2(4m) bounds."""
    with mpmath.workdps(digits):
        prefix = [mpmath.mpf(0)]
        for k in range(1, 4 * max_m + 1):
            prefix.append(prefix[-1] + mpmath.sqrt(k))
        floors = [0]
        for k in range(1, 4 * max_m + 1):
            floors.append(floors[-1] + math.isqrt(k))
        for m in range(1, max_m + 1):
            s = prefix[4 * m]
            if not (s - 4 * m < floors[4 * m] <= s):
                return f"M1 sandwich fails at 4m={4 * m}"
            m2 = m2_closed_form_4n(m)
            core = 2 * mpmath.sqrt(m) + prefix[m] + prefix[2 * m]
            if not (core - 1 < m2 < core + 3 * m + 1):
                return f"M2 sandwich fails at 4m={4 * m}"
    return None


def inequalities(max_n: int) -> SuiteResult:
    for failure in (term_count_chain(max_n), sqrt_sum_bounds(max_n), m1_sandwich(max(1, max_n // 4))):
        if failure:
            return SuiteResult("inequalities", False, failure)
    return SuiteResult("inequalities", True, f"chain and square-root bounds for n <= {max_n}")


def cache(max_n: int, path: Path | None = None) -> SuiteResult:
    """Round-trip through a temporary file, or validate an existing cache."""
    if path is not None:
        try:
            table = store.load(path)
        except (FormatError, OSError) as exc:
            return SuiteResult("cache", False, str(exc))
        reference = linear_table(table.max_n)
        if table != reference:
            bad = next(i for i in range(len(table)) if table[i] != reference[i])
            return SuiteResult("cache", False, f"{path}: wrong value at index {bad}")
        return SuiteResult("cache", True, f"{path} holds correct values for 0..{table.max_n}")
    table = linear_table(max_n)
    with tempfile.TemporaryDirectory() as tmp:
        target = Path(tmp) / "nested" / "cache.txt"
        store.save(table, target)
        if store.load(target) != table:
            return SuiteResult("cache", False, "round trip changed the table")
    return SuiteResult("cache", True, f"round trip of 0..{max_n}")


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "cross-method": cross_method,
    "oracle": oracles,
    "lemmas": lemmas,
    "parity": parity,
    "table-cells": table_cells,
    "inequalities": inequalities,
}


def run_all(max_n: int, cache_path: Path | None = None) -> list[SuiteResult]:
    results = [suite(max_n) for suite in SUITES.values()]
    results.append(cache(max_n, cache_path))
    return results
