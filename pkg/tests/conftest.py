import pytest

_LINES_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES_KEY] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test still fails through its own assert."""
    lines = request.config.stash[_LINES_KEY]

    def record(number, title, passed, detail, elapsed, limit):
        timed_ok = limit is None or elapsed < limit
        ok = passed and timed_ok
        budget = "" if limit is None else f" (limit {limit:g}s)"
        lines.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {detail}; {elapsed:.2f}s{budget}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)
