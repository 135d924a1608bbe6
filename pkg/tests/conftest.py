import pytest

from closure_ops.ideals import Window

# criterion number -> (ok, detail), filled in by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def cusp6():
    return Window("cusp", 6, 2)


@pytest.fixture(scope="session")
def cusp8():
    return Window("cusp", 8, 2)


@pytest.fixture(scope="session")
def dvr8():
    return Window("dvr", 8)


@pytest.fixture(scope="session")
def ded4():
    return Window("ded", 4, n_primes=2)
