"""Slow reference computations used to check the recurrence engines.

Nothing here shares code with :mod:`overpartition.kernel`.  The counts come
straight from the generating products or from the theta-series reciprocal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


def _product_prefix(n: int, parts) -> list[int]:
    """Coefficients 0..n of prod_{k in parts} (1 + q^k) / (1 - q^k)."""
    coeffs = [1] + [0] * n
    for k in parts:
        if k > n:
            break
        # 1 / (1 - q^k): unlimited plain copies of k
        for i in range(k, n + 1):
            coeffs[i] += coeffs[i - k]
        # 1 + q^k: at most one overlined k
        for i in range(n, k - 1, -1):
            coeffs[i] += coeffs[i - k]
    return coeffs


def enumerate_overpartitions(n: int) -> int:
    """p̄(n) by multiplying out the generating product part size by part size."""
    if n < 0:
        return 0
    return _product_prefix(n, range(1, n + 1))[n]


def enumerate_odd(n: int) -> int:
    """Overpartitions of n whose parts are all odd."""
    if n < 0:
        return 0
    return _product_prefix(n, range(1, n + 1, 2))[n]


def overpartition_table(n: int, odd_only: bool = False) -> list[int]:
    """All oracle counts for 0..n in one pass."""
    parts = range(1, n + 1, 2) if odd_only else range(1, n + 1)
    return _product_prefix(n, parts)


def list_overpartitions(n: int, largest: int | None = None) -> Iterator[tuple[tuple[int, bool], ...]]:
    """Yield every overpartition of n explicitly.

    Each overpartition is a tuple of ``(part, overlined)`` pairs with parts in
    non-increasing order; for a repeated part only the first copy may carry the
    overline.  Exponential; meant for tiny n.
    """
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for copies in range(1, n // part + 1):
            for rest in list_overpartitions(n - part * copies, part - 1):
                plain = ((part, False),) * copies
                yield plain + rest
                yield ((part, True),) + plain[1:] + rest


def format_overpartition(parts: tuple[tuple[int, bool], ...]) -> str:
    return "+".join(f"{p}̅" if bar else str(p) for p, bar in parts)


@dataclass
class SeriesPrefix:
    """First ``len(coeffs)`` coefficients of a formal power series."""

    coeffs: list[int]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series prefix needs at least one coefficient")

    def __len__(self) -> int:
        return len(self.coeffs)

    def inverse(self) -> "SeriesPrefix":
        """Reciprocal to the same length by long division; needs c0 = +-1."""
        c = self.coeffs
        if c[0] not in (1, -1):
            raise ValueError("constant term must be a unit for an integer inverse")
        support = [(i, c[i]) for i in range(1, len(c)) if c[i]]
        out = [c[0]]
        for i in range(1, len(c)):
            acc = 0
            for j, cj in support:
                if j > i:
                    break
                acc += cj * out[i - j]
            out.append(-acc * c[0])
        return SeriesPrefix(out)


def theta_prefix(n: int) -> SeriesPrefix:
    """sum_{k in Z} (-q)^(k^2) = 1 + 2 sum_{m>=1} (-1)^m q^(m^2), to length n+1."""
    coeffs = [1] + [0] * n
    m = 1
    while m * m <= n:
        coeffs[m * m] = 2 if m % 2 == 0 else -2
        m += 1
    return SeriesPrefix(coeffs)


def series_inverse(n: int) -> int:
    """p̄(n) as coefficient n of the reciprocal theta series."""
    if n < 0:
        return 0
    return theta_prefix(n).inverse().coeffs[n]
