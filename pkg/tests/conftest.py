import random

import pytest

from conjalg.catalog import builtin


@pytest.fixture
def rng():
    return random.Random(20261017)


@pytest.fixture
def H():
    return builtin("quaternion").spec


@pytest.fixture
def O():
    return builtin("octonion").spec


@pytest.fixture
def C():
    return builtin("complex").spec


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA

    outcome = {}
    for status in ("passed", "failed", "skipped", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_c" not in nodeid:
                continue
            n = int(nodeid.split("::test_c")[1][:2])
            ok = status == "passed" and outcome.get(n, True)
            outcome[n] = ok if status != "skipped" else outcome.get(n, None)
    if not outcome:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        if n not in outcome:
            continue
        mark = {True: "PASS", False: "FAIL", None: "SKIP"}[outcome[n]]
        terminalreporter.write_line(f"{mark} criterion {n}: {title}")
