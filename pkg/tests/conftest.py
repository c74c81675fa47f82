import pytest

from support import ACCEPTANCE_LINES, example_graph, bipartite_example_graph


@pytest.fixture
def example():
    return example_graph()


@pytest.fixture
def bip_example():
    return bipartite_example_graph()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
