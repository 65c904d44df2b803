import pytest

from overpartition.kernel import linear_table
from overpartition import oracle

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def table_2000():
    return linear_table(2000)


@pytest.fixture(scope="session")
def dp_500():
    """Oracle counts for 0..500, all parts and odd parts."""
    return oracle.overpartition_table(500), oracle.overpartition_table(500, odd_only=True)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
