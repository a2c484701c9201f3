import re
from collections import defaultdict

CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")

_outcomes: dict[int, list[str]] = defaultdict(list)


def pytest_runtest_logreport(report):
    m = CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes[int(m.group(1))].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_outcomes):
        results = _outcomes[k]
        status = "PASS" if all(r == "passed" for r in results) else "FAIL"
        terminalreporter.write_line(f"criterion {k}: {status} ({len(results)} check(s))")
