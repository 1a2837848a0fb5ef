import pytest

from redcenter.zoo import default_zoo

ALL_GROUPS = ["Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"]
SUPER_GROUPS = ["Z4", "Q8"]

# filled in by test_acceptance.py, echoed at the end of the run
ACCEPTANCE_LINES = {}


@pytest.fixture(scope="session")
def zoo():
    return default_zoo()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
