from contextlib import contextmanager

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Context manager that logs one PASS/FAIL line for an acceptance criterion."""

    @contextmanager
    def run(label):
        ok = False
        try:
            yield
            ok = True
        finally:
            ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}")
            print(ACCEPTANCE_LINES[-1])

    return run


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
