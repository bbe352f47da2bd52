import pytest

_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = _markers.get(report.nodeid)
    if marker is not None:
        _results[report.nodeid] = (marker, report.outcome)


_markers = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            _markers[item.nodeid] = mark.args


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_results.values()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")


@pytest.fixture(params=["python", "cython"])
def backend(request):
    from depdisj import kernels

    if request.param == "cython" and kernels.CScanner is None:
        pytest.skip("compiled scanner not built")
    return request.param
