import pytest

from czorbits.workspace import build_workspace

# one "ACCEPTANCE <name>: PASS|FAIL" entry per gate criterion, echoed
# after the run so the lines survive pytest's output capture
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def ws():
    """Full group/orbit/graph workspace, built once per test session."""
    return build_workspace()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
