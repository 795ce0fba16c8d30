import os

import pytest

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")

# criterion number -> (passed, label); filled by tests/test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion around the test body."""
    def start(num, label):
        request.node._criterion = (num, label)
    yield start


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    crit = getattr(item, "_criterion", None)
    if crit and rep.when == "call":
        num, label = crit
        prev = ACCEPTANCE.get(num, (True, label))
        ACCEPTANCE[num] = (prev[0] and rep.passed, label)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, label = ACCEPTANCE[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num}: {label}")
