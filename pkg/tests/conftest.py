import pytest

from dejean import _kernels


@pytest.fixture(params=_kernels.available())
def backend(request):
    """Each importable kernel module in turn (pure Python, then compiled)."""
    return _kernels.module(request.param)


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(tag, title): exit criterion of the build")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when == "teardown":
        return
    tag, title = marker.args
    failed = report.failed or (report.when == "setup" and report.skipped)
    if failed or report.when == "call":
        previous = _ACCEPTANCE.get(tag, (title, True))[1]
        _ACCEPTANCE[tag] = (title, previous and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(_ACCEPTANCE, key=lambda t: int(t[2:])):
        title, ok = _ACCEPTANCE[tag]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {tag}  {title}")
