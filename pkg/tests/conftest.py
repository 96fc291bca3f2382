import pytest

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or not marker.args:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _ACCEPTANCE[number] = (title, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, status = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2} {status}: {title}")
