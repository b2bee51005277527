import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: list[tuple[str, str, str]] = []


class _Criterion:
    def __init__(self, number: str, title: str):
        self.number, self.title = number, title

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        _ACCEPTANCE.append((self.number, self.title, "PASS" if exc_type is None else "FAIL"))
        return False


@pytest.fixture
def criterion():
    """Context manager that records one acceptance criterion's pass/fail line."""
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status in sorted(_ACCEPTANCE, key=lambda r: int(r[0])):
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
