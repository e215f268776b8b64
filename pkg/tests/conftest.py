import pytest

from alcovegt.paths import ORDINARY, GammaSequence, gamma_lambda
from alcovegt.tableaux import iter_partitions

A1, A2, TH = (1, 2), (2, 3), (1, 3)
LAM = (2, 1, 0)

# Desk-scale sweep: n <= 4, |lambda| <= 6.
SWEEP = [lam for n in (2, 3, 4) for lam in iter_partitions(n, 6)]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def pi1():
    return GammaSequence(3, LAM, ORDINARY, (A1, TH, A2, TH))


@pytest.fixture
def pi2():
    return GammaSequence(3, LAM, ORDINARY, (A2, TH, A1, TH))


@pytest.fixture
def g415():
    return gamma_lambda(3, LAM)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
