import numpy as np
import pytest

from biharm.mesh import Mesh, generate_lshape_mesh, generate_square_mesh, refine, uniform_refine


def reference_mesh() -> Mesh:
    """The single reference triangle (0,0), (1,0), (0,1)."""
    return Mesh(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]), np.array([[0, 1, 2]]),
                np.zeros(1, dtype=np.int64))


def randomly_refined(mesh: Mesh, rounds: int, seed: int, share: float = 0.3) -> Mesh:
    rng = np.random.default_rng(seed)
    for _ in range(rounds):
        k = max(1, int(share * mesh.n_triangles))
        mesh = refine(mesh, rng.choice(mesh.n_triangles, size=k, replace=False))
    return mesh


@pytest.fixture
def square2():
    return generate_square_mesh(2)


@pytest.fixture
def lshape_fine():
    return uniform_refine(generate_lshape_mesh())


@pytest.fixture
def graded_square():
    return randomly_refined(generate_square_mesh(2), rounds=3, seed=7)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
