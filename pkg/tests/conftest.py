from __future__ import annotations

import os

import pytest

RESULTS: dict[int, tuple[str, str]] = {}


def record(criterion: int, passed: bool | None, detail: str = "") -> None:
    status = "SKIP" if passed is None else ("PASS" if passed else "FAIL")
    RESULTS[criterion] = (status, detail)


@pytest.fixture
def criterion_log():
    return record


def pytest_collection_modifyitems(config, items):
    if os.environ.get("QUADBETA_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow; set QUADBETA_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, 11):
        RESULTS.setdefault(n, ("SKIP", "not run"))
    for n in sorted(RESULTS):
        status, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {detail}")
