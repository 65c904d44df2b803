"""Reference counts for the linear and hybrid computations.

M1(n) counts the table values the linear recurrence reads while building
p̄(1..n).  M2(n) counts those the hybrid method reads: the linear phase up to
floor(n/2) plus one nonlinear step.  Counting in the nonlinear step follows the
factored form of each sum, so a value that occurs twice is counted twice:

* a double sum row ``p̄(k) * (p̄(a1) + ... + p̄(aJ))`` costs 1 + J;
* a single product ``p̄(a) p̄(b)`` costs 2;
* a square ``p̄(a)^2`` costs 2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .kernel import SqrtKind, int_sqrt, step_plan


def limit_ratio() -> float:
    return 1 / 8 + math.sqrt(1 / 8)


def truncate3(x: Fraction) -> str:
    """Three decimals, truncated toward zero."""
    scaled = math.floor(x * 1000) if x >= 0 else -math.floor(-x * 1000)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 1000)
    return f"{sign}{whole}.{frac:03d}"


@dataclass(frozen=True)
class RefCountReport:
    n: int
    m1: int
    m2: int
    m2_linear_part: int
    m2_step_part: int

    @property
    def ratio(self) -> Fraction:
        if self.m1 == 0:
            raise DomainError("ratio undefined for n = 0")
        return Fraction(self.m2, self.m1)

    @property
    def ratio_str(self) -> str:
        return truncate3(self.ratio)

    def as_record(self) -> dict:
        return {
            "n": self.n,
            "m1": self.m1,
            "m2": self.m2,
            "m2_linear_part": self.m2_linear_part,
            "m2_step_part": self.m2_step_part,
            "ratio": self.ratio_str,
        }


def m1(n: int) -> int:
    """sum_{k=1}^{n} floor(sqrt(k))."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return sum(math.isqrt(k) for k in range(1, n + 1))


def step_reference_count(n: int) -> int:
    """References read by the single nonlinear step for p̄(n)."""
    plan = step_plan(n)
    count = 0
    for k in range(plan.row_stop):
        length = plan.row_length(k)
        if length > 0:
            count += 1 + length
    count += 2 * plan.product_stop
    count += 2 * len(plan.square_args)
    if plan.centre is not None:
        count += 2
    return count


def m2_instrumented(n: int) -> RefCountReport:
    if n < 1:
        raise DomainError(f"M2 is defined for n >= 1, got {n}")
    linear = m1(n // 2)
    step = step_reference_count(n)
    return RefCountReport(n=n, m1=m1(n), m2=linear + step, m2_linear_part=linear, m2_step_part=step)


def m2_closed_form_4n(m: int) -> int:
    """M2(4m) = 2m + 1 + 2 floor(sqrt m) + sum_{k<=m} ceil(sqrt k) + sum_{k<=2m} floor(sqrt k)."""
    if m < 1:
        raise DomainError(f"closed form needs m >= 1, got {m}")
    ceil_sum = sum(int_sqrt(k, SqrtKind.CEIL) for k in range(1, m + 1))
    return 2 * m + 1 + 2 * math.isqrt(m) + ceil_sum + m1(2 * m)


def step_term_count(n: int) -> int:
    """Number of product terms in the nonlinear expansion of p̄(n)."""
    plan = step_plan(n)
    count = sum(len(plan.row_args(k)) for k in range(plan.row_stop))
    count += plan.product_stop + len(plan.square_args)
    if plan.centre is not None:
        count += 1
    return count


def step_term_count_closed(n: int) -> int:
    """Closed form of :func:`step_term_count`, one per parity of n."""
    m = n // 4
    if n % 2 == 0:
        return m + 1 + m1(m)
    return sum(int_sqrt(k, SqrtKind.NEAREST) for k in range(1, m + 2))


def ratio_table(residue: int, ns) -> list[RefCountReport]:
    if residue not in (0, 1, 2, 3):
        raise DomainError(f"residue must be 0..3, got {residue}")
    rows = []
    for n in ns:
        if n < 1 or n % 4 != residue:
            raise DomainError(f"n={n} is not a positive integer congruent to {residue} mod 4")
        rows.append(m2_instrumented(n))
    return rows


def format_table(rows: list[RefCountReport]) -> str:
    """Aligned text in the paper's layout: one line per quantity, one column per n."""
    labels = ["n", "M1(n)", "M2(n)", "M2/M1"]
    cells = [
        [str(r.n) for r in rows],
        [str(r.m1) for r in rows],
        [str(r.m2) for r in rows],
        [r.ratio_str for r in rows],
    ]
    widths = [max(len(line[i]) for line in cells) for i in range(len(rows))]
    head = max(map(len, labels))
    out = []
    for label, line in zip(labels, cells):
        out.append(label.ljust(head) + "  " + "  ".join(c.rjust(w) for c, w in zip(line, widths)))
    return "\n".join(out)


# Values printed in the four published tables, keyed by residue mod 4:
# (n, M1, M2, ratio).
PUBLISHED_TABLES: dict[int, list[tuple[int, int, int, str]]] = {
    1: [
        (1, 1, 2, "2.000"), (5, 7, 6, "0.857"), (9, 16, 13, "0.812"), (13, 28, 20, "0.714"),
        (17, 42, 27, "0.642"), (21, 58, 36, "0.620"), (25, 75, 47, "0.626"), (101, 635, 337, "0.530"),
        (1001, 20646, 10149, "0.491"), (10001, 661850, 319225, "0.482"),
    ],
    2: [
        (2, 2, 3, "1.500"), (6, 9, 9, "1.000"), (10, 19, 17, "0.894"), (14, 31, 25, "0.806"),
        (18, 46, 35, "0.760"), (22, 62, 46, "0.741"), (26, 80, 57, "0.712"), (102, 645, 376, "0.582"),
        (1002, 20677, 10526, "0.509"), (10002, 661950, 322972, "0.487"),
    ],
    3: [
        (3, 3, 3, "1.000"), (7, 11, 7, "0.636"), (11, 22, 14, "0.636"), (15, 34, 21, "0.617"),
        (19, 50, 29, "0.580"), (23, 66, 38, "0.575"), (27, 85, 48, "0.564"), (103, 655, 340, "0.519"),
        (1003, 20708, 10156, "0.490"), (10003, 662050, 319246, "0.482"),
    ],
    0: [
        (4, 5, 8, "1.600"), (8, 13, 15, "1.153"), (12, 25, 23, "0.920"), (16, 38, 33, "0.868"),
        (20, 54, 44, "0.814"), (24, 70, 55, "0.785"), (28, 90, 66, "0.733"), (104, 665, 395, "0.593"),
        (1004, 20739, 10580, "0.510"), (10004, 662150, 323144, "0.488"),
    ],
}


def sqrt_sum(n: int, digits: int = 40):
    """sum_{k=1}^{n} sqrt(k) in mpmath at ``digits`` significant digits."""
    import mpmath

    with mpmath.workdps(digits):
        return mpmath.fsum(mpmath.sqrt(k) for k in range(1, n + 1))
