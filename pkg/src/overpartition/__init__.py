"""Exact computation of the overpartition function p̄(n)."""
from .errors import DomainError, FormatError, OverpartitionError, TableTooShort
from .kernel import (
    OddSeriesView,
    SqrtKind,
    check_convolution,
    compute,
    hybrid_compute,
    int_sqrt,
    linear_extend,
    linear_table,
    nonlinear_value,
    podd_value,
    theorem_value,
)
from .plan import ComputePlan, Method, OutputFormat
from .table import OverpartitionTable

__all__ = [
    "ComputePlan",
    "DomainError",
    "FormatError",
    "Method",
    "OddSeriesView",
    "OutputFormat",
    "OverpartitionError",
    "OverpartitionTable",
    "SqrtKind",
    "TableTooShort",
    "check_convolution",
    "compute",
    "hybrid_compute",
    "int_sqrt",
    "linear_extend",
    "linear_table",
    "nonlinear_value",
    "podd_value",
    "theorem_value",
]
