import re

_criteria: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    match = re.search(r"test_acceptance\.py::test_criterion_(\d+[a-z]?)_", report.nodeid)
    if match:
        _criteria.setdefault(match.group(1), []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=lambda k: (int(re.match(r"\d+", k).group()), k)):
        verdict = "PASS" if all(o == "passed" for o in _criteria[key]) else "FAIL"
        terminalreporter.write_line(f"criterion {key}: {verdict}")
