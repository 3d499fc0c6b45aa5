import pytest

_VERDICTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_VERDICTS] = []


@pytest.fixture
def verdict(request):
    """Record one pass/fail line for an acceptance criterion."""
    store = request.config.stash[_VERDICTS]

    def record(number, title, ok, detail, seconds):
        line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail} ({seconds:.1f} s)"
        store.append((number, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_VERDICTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
