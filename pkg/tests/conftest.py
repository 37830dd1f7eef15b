import pytest

from mep import load_fixture


@pytest.fixture(scope="session")
def fig1():
    return load_fixture()



def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
