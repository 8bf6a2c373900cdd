import pytest

# criterion number -> [title, passed, total]
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    # count the call phase, or the setup phase when setup itself failed
    if report.when == "call" or (report.when == "setup" and not report.passed):
        number, title = marker.args
        entry = _CRITERIA.setdefault(number, [title, 0, 0])
        entry[2] += 1
        entry[1] += int(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, passed, total = _CRITERIA[number]
        status = "PASS" if passed == total else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title} ({passed}/{total} checks)")
