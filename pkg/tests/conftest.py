import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semiweight.tree import iter_semigroups  # noqa: E402


@pytest.fixture(scope="session")
def genus10():
    """Every numerical semigroup of genus <= 10, from the tree."""
    return list(iter_semigroups(10))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
