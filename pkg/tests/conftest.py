import numpy as np
import pytest

from tokengraphs.graph import build_family, laplacian


def dense_eigs(a):
    """Reference eigenvalues from LAPACK, used only as an independent oracle."""
    a = np.asarray(a)
    if np.iscomplexobj(a):
        return np.linalg.eigvalsh(a)
    return np.linalg.eigvalsh(a.astype(float))


@pytest.fixture
def oracle():
    return dense_eigs


SMALL_FAMILIES = [
    "cycle:5",
    "cycle:8",
    "path:6",
    "complete:5",
    "star:6",
    "complete_multipartite:2,3",
    "complete_multipartite:1,2,3",
    "odd:3",
    "hypercube:3",
]


@pytest.fixture(params=SMALL_FAMILIES)
def small_graph(request):
    return build_family(request.param)


@pytest.fixture
def lap_of():
    return laplacian


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
