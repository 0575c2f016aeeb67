import pytest

from flagaut.catalog import generate_catalog

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def catalog():
    return generate_catalog()


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("]")[1].split(".")[0])):
            terminalreporter.write_line(line)
