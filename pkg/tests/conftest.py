import pathlib

import pytest

TESTS = pathlib.Path(__file__).resolve().parent
FIXTURES = TESTS.parent / "fixtures"

# Pass/fail lines recorded by the acceptance tests; echoed at the end of
# the run so they are visible even with output capture on.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def fx():
    """Absolute path of a fixture file by name."""

    def path(name):
        return str(FIXTURES / name)

    return path
