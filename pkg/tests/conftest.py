import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from adicseq.correlation import resolve_params  # noqa: E402
from adicseq.numtheory import build_params  # noqa: E402

PRIMES_500 = (5, 13, 29, 53, 173, 229, 293)


@pytest.fixture(scope="session")
def resolved():
    cache = {}

    def get(p):
        if p not in cache:
            cache[p] = resolve_params(build_params(p))
        return cache[p]

    return get


_GATE = []


@pytest.fixture
def gate(request):
    """Record one PASS/FAIL line for an acceptance criterion."""

    class Gate:
        def __init__(self):
            self.detail = ""

    g = Gate()
    yield g
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    _GATE.append((request.node.name, ok, g.detail))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _GATE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _GATE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
