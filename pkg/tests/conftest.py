import re

_results = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_ac" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results.append((report.nodeid.rsplit("::", 1)[1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _results:
        m = re.match(r"test_ac(\d+)_(.*)", name)
        label = f"AC{int(m.group(1))} {m.group(2).replace('_', ' ')}"
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {label:<32} {duration:6.2f}s")
