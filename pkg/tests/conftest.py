from __future__ import annotations

import pytest

from kappa1.graph import Graph, complete_graph, cycle_graph, kneser_graph, path_graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def petersen() -> Graph:
    return kneser_graph(5, 2)


@pytest.fixture(scope="session")
def kg73() -> Graph:
    return kneser_graph(7, 3)


@pytest.fixture(scope="session")
def kg93() -> Graph:
    return kneser_graph(9, 3)


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def k5() -> Graph:
    return complete_graph(5)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
