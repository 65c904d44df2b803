"""Dense memo of exact overpartition values."""
from __future__ import annotations

from typing import Iterable, Iterator


class OverpartitionTable:
    """Exact values p̄(0), ..., p̄(max_n) held in a Python list.

    The table only grows; entries once written are never modified.  A fresh
    table holds the single base value p̄(0) = 1.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int] | None = None):
        self.values: list[int] = [1] if values is None else list(values)
        if not self.values or self.values[0] != 1:
            raise ValueError("an overpartition table must start with p̄(0) = 1")

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def covers(self, n: int) -> bool:
        return n <= self.max_n

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OverpartitionTable):
            return NotImplemented
        return self.values == other.values

    def __repr__(self) -> str:
        head = ", ".join(map(str, self.values[:6]))
        tail = ", ..." if len(self.values) > 6 else ""
        return f"OverpartitionTable(max_n={self.max_n}, values=[{head}{tail}])"
