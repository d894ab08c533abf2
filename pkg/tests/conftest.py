import pytest

from l1homology import corpus

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def tetra():
    return corpus.load_complex("boundary_tetrahedron")


@pytest.fixture(scope="session")
def triangle():
    return corpus.load_complex("triangle")


@pytest.fixture(scope="session")
def torus():
    return corpus.load_complex("torus7")


@pytest.fixture(scope="session")
def genus2():
    return corpus.load_complex("genus2")


@pytest.fixture(scope="session")
def rp2():
    return corpus.load_complex("rp2_6")


@pytest.fixture(scope="session")
def double_cover():
    return corpus.load_cover("circle_double_cover")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
