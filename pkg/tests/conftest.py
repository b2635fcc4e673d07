import pytest

from chainent import correlation_table

#: one line per acceptance criterion, echoed after the run (see
#: tests/test_acceptance.py)
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def tables():
    """Memoized correlation tables shared across the whole run."""
    cache = {}

    def get(alpha, l_max=130):
        tab = cache.get(alpha)
        if tab is None or tab.l_max < l_max:
            tab = correlation_table(alpha, max(l_max, 130))
            cache[alpha] = tab
        return tab

    return get
