import sys

import pytest

from canonical_covers.numeric import LinForm


@pytest.fixture
def n():
    return LinForm.var("n")


@pytest.fixture
def k():
    return LinForm.var("k")



def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        title, ok = mod.RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {title}")
