import pytest

from multlat.catalog import builtin


@pytest.fixture(scope="session")
def idz12():
    return builtin("idz12")


@pytest.fixture(scope="session")
def n5():
    return builtin("n5_meet")


@pytest.fixture(scope="session")
def k_host():
    return builtin("figure3_K")


def ix(M, *labels):
    """Element indices for labels, in the order given."""
    return [M.lattice.index(x) for x in labels]


def lab(M, elems):
    return {M.label(x) for x in elems}


# filled by test_acceptance.py, printed once at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
