import pytest

from descent_forge.tree import enumerate_tree

# (x, y, m) as printed in the paper's list of the first solutions
PAPER_SOLUTIONS = [
    (1, 2, 5),
    (701, 430, 15),
    (262009, 78842, 25),
    (78606773, 10718566, 35),
]


@pytest.fixture(scope="session")
def tree_205():
    return enumerate_tree(205)


@pytest.fixture(scope="session")
def tree_by_m(tree_205):
    return {node.solution.m: node for node in tree_205}


_criteria = {}


def record_criterion(number, title, passed):
    _criteria[number] = (title, passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, passed = _criteria[n]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {n:2d}: {title}")
