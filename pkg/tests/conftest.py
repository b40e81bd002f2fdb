import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, limit): acceptance criterion with a time limit in seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, limit = mark.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _results[number] = (report.passed, report.duration, limit, item.name)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        ok, secs, limit, name = _results[number]
        status = "PASS" if ok and secs < limit else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {secs:7.2f} s (limit {limit} s)  {name}")
