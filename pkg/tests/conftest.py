import numpy as np
import pytest

_CRITERIA = []


@pytest.fixture
def record_criterion():
    """Record one acceptance line; the terminal summary lists them in order."""

    def record(number, title, passed, detail=""):
        line = f"{'PASS' if passed else 'FAIL'} criterion {number:>2}: {title}"
        if detail:
            line += f" [{detail}]"
        _CRITERIA.append((number, line))
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_CRITERIA, key=lambda x: x[0]):
        terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
