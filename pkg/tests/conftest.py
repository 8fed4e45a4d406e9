import pytest

_ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion for the run summary."""
    name = request.node.name
    _ACCEPTANCE[name] = f"FAIL {name}"

    def report(detail: str):
        _ACCEPTANCE[name] = f"PASS {name}: {detail}"
        print(_ACCEPTANCE[name])

    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE.values():
            terminalreporter.write_line(line)
