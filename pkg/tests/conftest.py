import random

import pytest

from packbound.graph import Graph

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if g.is_connected():
            return g


@pytest.fixture
def acceptance_report():
    """Record one pass/fail line per acceptance criterion."""
    def record(name: str, passed: bool, detail: str = ""):
        _ACCEPTANCE[name] = (passed, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        passed, detail = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
