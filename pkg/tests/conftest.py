import pytest

_CRITERIA = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's outcome for the end-of-run report."""
    entry = {"name": request.node.name, "passed": False, "detail": ""}
    _CRITERIA.append(entry)

    def done(detail=""):
        entry["passed"] = True
        entry["detail"] = detail

    return done


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for entry in _CRITERIA:
        status = "PASS" if entry["passed"] else "FAIL"
        terminalreporter.write_line(f"{status}  {entry['name']}  {entry['detail']}")
