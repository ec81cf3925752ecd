import time

import pytest

from mmr.braid import parse_braid

KNOTS = {
    "unknot": ("", 1),
    "trefoil": ("1,1,1", None),
    "figure_eight": ("1,-2,1,-2", None),
    "cinquefoil": ("1,1,1,1,1", None),
    "three_twist": ("1,1,1,2,-1,2", None),
}


@pytest.fixture(scope="session")
def knots():
    return {name: parse_braid(w, n) for name, (w, n) in KNOTS.items()}


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    _acceptance.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, dur in sorted(_acceptance):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({dur:.2f} s)")


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
