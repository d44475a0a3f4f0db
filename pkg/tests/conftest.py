import pytest

from boxlat import catalog

ACCEPTANCE_LINES = []

SMALL = ("chain(2)", "chain(3)", "boolean(2)", "M3", "N5")


@pytest.fixture(scope="session")
def M3():
    return catalog("M3")


@pytest.fixture(scope="session")
def N5():
    return catalog("N5")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
