import os
import re
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_criteria: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of an acceptance criterion for the summary block."""
    def record(label: str, passed: bool, detail: str = ""):
        _criteria[label] = (passed, detail)
    return record


def _order(label):
    num, sub = re.match(r"(\d+)(\w*)", label).groups()
    return int(num), sub


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=_order):
        passed, detail = _criteria[label]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}")
