import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphdesigns import catalog_get, from_edge_list, names, spectrum  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def cycle(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete(n):
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"K{n}")


@lru_cache(maxsize=None)
def catalog_spectrum(name):
    return spectrum(catalog_get(name))


@pytest.fixture(scope="session")
def catalog():
    return {name: (catalog_get(name), catalog_spectrum(name)) for name in names()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
