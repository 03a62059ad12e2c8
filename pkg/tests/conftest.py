from __future__ import annotations

import pytest

from halinrep import decompose_tuc

from support import ACCEPTANCE_LINES, fig1


@pytest.fixture
def g1():
    return fig1()


@pytest.fixture
def d1(g1):
    return decompose_tuc(g1)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
