import pytest

from extquot._backend import available_backends


@pytest.fixture(params=sorted(available_backends()))
def kernels(request):
    """Each available kernel module in turn (compiled and pure Python)."""
    return available_backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "SUMMARY_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
