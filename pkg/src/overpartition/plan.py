"""Computation plan shared by the kernel driver and the command line."""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import DomainError


class Method(str, Enum):
    LINEAR = "linear"
    HYBRID = "hybrid"
    SERIES = "series"
    ENUMERATE = "enumerate"


class OutputFormat(str, Enum):
    PLAIN = "plain"
    STRUCTURED = "structured"


# Oracle methods are quadratic in n.
DEFAULT_ORACLE_LIMIT = 10_000

# Below this n the nonlinear step runs its worker chunks in-process; forking a
# pool costs more than the whole sum.
DEFAULT_PROCESS_THRESHOLD = 20_000


def default_workers() -> int:
    return os.cpu_count() or 1


@dataclass(frozen=True)
class ComputePlan:
    method: Method = Method.HYBRID
    workers: int = 1
    cache_path: Path | None = None
    output: OutputFormat = OutputFormat.PLAIN
    oracle_limit: int = DEFAULT_ORACLE_LIMIT
    process_threshold: int = DEFAULT_PROCESS_THRESHOLD
    cache_fallback: bool = True

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        object.__setattr__(self, "output", OutputFormat(self.output))
        if self.cache_path is not None:
            object.__setattr__(self, "cache_path", Path(self.cache_path))
        if self.workers < 1:
            raise DomainError(f"workers must be >= 1, got {self.workers}")

    def check_size(self, n: int) -> None:
        """Refuse oracle methods above the configured safety bound."""
        if n < 0:
            raise DomainError(f"n must be nonnegative, got {n}")
        if self.method in (Method.SERIES, Method.ENUMERATE) and n > self.oracle_limit:
            raise DomainError(
                f"method {self.method.value!r} is quadratic; n={n} exceeds the limit {self.oracle_limit}"
            )
