import itertools

import pytest

from qschubert import make_shape

ACCEPTANCE_LINES = []


def shapes_up_to(max_n, min_n=2):
    return [make_shape(n, k) for n in range(min_n, max_n + 1) for k in range(1, n)]


@pytest.fixture
def g24():
    return make_shape(4, 2)


@pytest.fixture
def p3():
    # one-part partitions, k = 3
    return make_shape(4, 3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
