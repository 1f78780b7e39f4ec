import re
from collections import defaultdict

_CRITERION = re.compile(r"test_criterion_(\d+)")
_outcomes: dict[int, list[bool]] = defaultdict(list)


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome == "failed":
        _outcomes[int(m.group(1))].append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_outcomes):
        ok = all(_outcomes[k])
        terminalreporter.write_line(f"CRITERION {k}: {'PASS' if ok else 'FAIL'} ({len(_outcomes[k])} checks)")
