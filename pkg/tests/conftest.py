import pytest

from grassgb import kernel

ACCEPTANCE_LINES = []


@pytest.fixture(params=sorted(kernel.backends()))
def backend(request, monkeypatch):
    """Route the reduction kernel through each available backend."""
    mod = kernel.backends()[request.param]
    monkeypatch.setattr(kernel, "_impl", mod)
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
