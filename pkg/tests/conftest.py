import pytest

from flagrep.root_system import build_root_system

SMALL_TYPES = [("A", 1), ("A", 2), ("B", 2), ("G", 2), ("A", 3), ("B", 3), ("C", 3)]
RANK_LE_4 = SMALL_TYPES + [("A", 4), ("B", 4), ("C", 4), ("D", 4), ("F", 4)]
ALL_BUILT = RANK_LE_4 + [("A", 5), ("B", 5), ("D", 5), ("E", 6), ("E", 7), ("E", 8)]


@pytest.fixture(scope="session")
def root_systems():
    cache = {}

    def get(t, n):
        if (t, n) not in cache:
            cache[t, n] = build_root_system(t, n)
        return cache[t, n]

    return get


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
