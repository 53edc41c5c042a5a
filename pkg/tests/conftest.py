import pytest

from zetaphase import kernels

# acceptance tests append (number, title, passed, detail) here
ACCEPTANCE_RESULTS: list = []


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    with kernels.using_backend(request.param) as mod:
        yield mod


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} ({detail})")
