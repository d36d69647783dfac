import numpy as np
import pytest
import sympy

from biharm.element import MORLEY, NTW
from biharm.errors import ConfigurationError
from biharm.estimator import (
    CHUNK,
    aggregate_per_triangle,
    estimate,
    kappa,
    oscillation,
)
from biharm.mesh import generate_square_mesh
from biharm.system import DiscreteField, build_dofmap, interpolate, solve_problem
from conftest import randomly_refined, reference_mesh


def zero(x, y):
    return np.zeros(np.broadcast_shapes(np.shape(x), np.shape(y)))


def one(x, y):
    return np.ones(np.broadcast_shapes(np.shape(x), np.shape(y)))


def random_field(mesh, elem, seed=0):
    d = build_dofmap(mesh, elem)
    u = np.random.default_rng(seed).standard_normal(d.n)
    u[d.boundary] = 0.0
    return DiscreteField(mesh, elem, u, d)


def test_kappa():
    assert np.allclose(kappa([0.5, 2.0], 1.0), [0.5, 1.0])
    assert np.allclose(kappa([1e-3, 1.0], 0.0), [1.0, 1.0])


@pytest.mark.parametrize("elem,eps,alpha", [(MORLEY, 1.0, 0), (NTW, 1e-2, 1), (NTW, 0.0, 1)])
def test_zero_field_zero_load(graded_square, elem, eps, alpha):
    uh = DiscreteField(graded_square, elem, np.zeros(build_dofmap(graded_square, elem).n))
    rep = estimate(graded_square, elem, eps, alpha, zero, uh)
    assert rep.eta == 0.0 and rep.osc == 0.0


def test_morley_projection_term_vanishes(graded_square):
    rep = estimate(graded_square, MORLEY, 1.0, 0, one, random_field(graded_square, MORLEY))
    assert not np.any(rep.mu0_sq)


def test_quadratic_interpolant_has_no_interior_jumps(graded_square):
    q = lambda x, y: x**2 + 3 * x * y - y**2
    gq = lambda x, y: np.stack([2 * x + 3 * y, 3 * x - 2 * y], -1)
    for elem in (MORLEY, NTW):
        uh = DiscreteField(graded_square, elem, interpolate(graded_square, elem, q, gq))
        rep = estimate(graded_square, elem, 1.0, 0, zero, uh)
        inner = ~graded_square.boundary
        assert np.abs(rep.mu2_sq).max() < 1e-20
        assert np.abs(rep.mu3_sq).max() < 1e-20
        assert np.abs(rep.xi_sq[inner]).max() < 1e-20
        assert np.abs(rep.mu0_sq).max() < 1e-20


def test_hessian_jump_term_by_hand(graded_square):
    """Morley Hessians are piecewise constant, so the edge integral is a product."""
    mesh = graded_square
    eps = 0.3
    uh = random_field(mesh, MORLEY, seed=4)
    rep = estimate(mesh, MORLEY, eps, 0, zero, uh)
    c = mesh.vertices[mesh.triangles].mean(axis=1)[:, None, :]
    H = uh.poly().hessian(c)[:, 0]
    for e in np.flatnonzero(~mesh.boundary)[:10]:
        tp, tm = mesh.edge_tris[e]
        n = mesh.normals[e]
        jn = (H[tp] - H[tm]) @ n
        hF = np.linalg.norm(np.diff(mesh.vertices[mesh.edges[e]], axis=0))
        kF = min(1.0, hF / eps)
        assert rep.mu2_sq[e] == pytest.approx(eps**3 * kF * hF * jn @ jn, rel=1e-12)


def test_ntw_value_jumps_vanish(graded_square):
    uh = random_field(graded_square, NTW, seed=3)
    tr = uh.edge_traces(np.linspace(0.05, 0.95, 7))
    inner = ~graded_square.boundary
    assert np.abs(tr.jump((0, 0))[inner]).max() ** 2 < 1e-20


@pytest.mark.parametrize("elem,eps,alpha", [(MORLEY, 1.0, 0), (NTW, 1e-2, 1), (NTW, 1.0, 0)])
def test_per_triangle_sum_identity(graded_square, elem, eps, alpha):
    uh = random_field(graded_square, elem, seed=5)
    rep = estimate(graded_square, elem, eps, alpha, one, uh)
    total = (rep.mu0_sq.sum() + rep.mu1_sq.sum() + rep.mu2_sq.sum() + rep.mu3_sq.sum()
             + rep.xi_sq.sum())
    assert abs(rep.eta_sq.sum() - total) <= 1e-14 * total
    assert rep.eta**2 == pytest.approx(total, rel=1e-14)
    assert np.all(rep.eta_sq >= 0.0)
    assert rep.eta <= rep.eta_sum <= np.sqrt(5.0) * rep.eta


def test_edge_share_split_half_half(square2):
    m = square2
    e = int(np.flatnonzero(~m.boundary)[0])
    face = np.zeros(m.n_edges)
    face[e] = 2.0
    z = np.zeros(m.n_triangles)
    eta_sq = aggregate_per_triangle(m, z, z, face, np.zeros(m.n_edges), np.zeros(m.n_edges))
    tp, tm = m.edge_tris[e]
    assert eta_sq[tp] == 1.0 and eta_sq[tm] == 1.0 and eta_sq.sum() == 2.0
    b = int(np.flatnonzero(m.boundary)[0])
    face = np.zeros(m.n_edges)
    face[b] = 2.0
    eta_sq = aggregate_per_triangle(m, z, z, face, np.zeros(m.n_edges), np.zeros(m.n_edges))
    assert eta_sq[m.edge_tris[b, 0]] == 2.0


def test_quadratic_scaling(graded_square):
    uh = random_field(graded_square, NTW, seed=6)
    r1 = estimate(graded_square, NTW, 1e-2, 1, zero, uh)
    r2 = estimate(graded_square, NTW, 1e-2, 1, zero, 3.0 * uh)
    assert np.allclose(r2.eta_sq, 9.0 * r1.eta_sq, rtol=1e-12)


def test_small_eps_approaches_eps_zero(graded_square):
    uh = random_field(graded_square, NTW, seed=7)
    r0 = estimate(graded_square, NTW, 0.0, 1, one, uh)
    r1 = estimate(graded_square, NTW, 1e-12, 1, one, uh)
    assert r1.eta == pytest.approx(r0.eta, rel=1e-6)


def test_eps_zero_needs_continuous_element(square2):
    with pytest.raises(ConfigurationError):
        estimate(square2, MORLEY, 0.0, 1, one, random_field(square2, MORLEY))


def test_oscillation_constant_load(graded_square):
    assert np.abs(oscillation(graded_square, NTW, 1e-2, one)).max() < 1e-28


def test_oscillation_cubic_against_symbolic():
    x, y = sympy.symbols("x y")
    mons = [1, x, y, x**2, x * y, y**2]
    integ = lambda g: sympy.integrate(g, (y, 0, 1 - x), (x, 0, 1))
    M = sympy.Matrix(6, 6, lambda i, j: integ(mons[i] * mons[j]))
    b = sympy.Matrix([integ(x**3 * m) for m in mons])
    c = M.solve(b)
    best = sum(c[i] * mons[i] for i in range(6))
    sq = float(integ((x**3 - best) ** 2))
    h = np.sqrt(2.0)
    # eps = 1 and h > 1 give kappa = 1
    osc = oscillation(reference_mesh(), NTW, 1.0, lambda x, y: x**3)
    assert osc[0] == pytest.approx(h**2 * sq, rel=1e-10)


def test_full_residual_flag(graded_square):
    uh = random_field(graded_square, NTW, seed=8)
    a = estimate(graded_square, NTW, 0.5, 1, one, uh)
    b = estimate(graded_square, NTW, 0.5, 1, one, uh, full_residual=True)
    assert np.array_equal(a.mu2_sq, b.mu2_sq) and not np.allclose(a.mu1_sq, b.mu1_sq)
    um = random_field(graded_square, MORLEY, seed=8)
    a = estimate(graded_square, MORLEY, 0.5, 0, one, um)
    b = estimate(graded_square, MORLEY, 0.5, 0, one, um, full_residual=True)
    assert np.allclose(a.mu1_sq, b.mu1_sq, rtol=1e-12)


def test_chunked_matches_single_batch(monkeypatch):
    import biharm.estimator as est

    mesh = randomly_refined(generate_square_mesh(4), rounds=2, seed=1)
    uh = solve_problem(mesh, NTW, 1e-2, 1, one)
    ref = estimate(mesh, NTW, 1e-2, 1, one, uh)
    monkeypatch.setattr(est, "CHUNK", 37)
    parts = est.estimate(mesh, NTW, 1e-2, 1, one, uh)
    assert CHUNK > mesh.n_triangles
    assert np.allclose(parts.eta_sq, ref.eta_sq, rtol=1e-13, atol=0.0)
