import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from slee.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    G = Graph(n, frozenset(p for p, c in zip(pairs, chosen) if c))
    if connected:
        from slee.graph import is_connected
        from hypothesis import assume
        assume(is_connected(G))
    return G


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = report.keywords.get("acceptance_id")
    if marker is None:
        return
    for key in report.keywords:
        if key.startswith("AC-"):
            if _ACCEPTANCE.get(key) != "failed":
                _ACCEPTANCE[key] = report.outcome


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            label = f"AC-{m.args[0]:02d} {m.args[1]}"
            item.keywords["acceptance_id"] = True
            item.keywords[label] = True


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(num, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE):
        outcome = _ACCEPTANCE[label]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {label}")
