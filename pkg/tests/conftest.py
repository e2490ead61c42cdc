import pytest

from coloredhomfly.laurent import LaurentPoly2


@pytest.fixture(scope="session")
def aq():
    return LaurentPoly2.gens()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
