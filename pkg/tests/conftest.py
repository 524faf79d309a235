
_CRITERIA = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.outcome != "passed":
        key = int(name.split("_")[2])
        prev = _CRITERIA.get(key, True)
        _CRITERIA[key] = prev and report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA):
        status = "PASS" if _CRITERIA[key] else "FAIL"
        terminalreporter.write_line(f"criterion {key}: {status}")
