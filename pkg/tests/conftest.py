import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def report():
    """Collects one pass/fail line per acceptance criterion."""

    def record(criterion: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}".rstrip())

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
