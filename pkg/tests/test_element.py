from dataclasses import replace

import numpy as np
import pytest

from biharm.element import (
    MORLEY,
    NTW,
    MAX_DOF_COND,
    Poly2,
    build_local_basis,
    certify_assumption,
    exponents,
    get_element,
    l2_project,
    map_points,
    n_monomials,
    poly_multiply,
    project_samples,
    triangle_frames,
)
from biharm.errors import DegenerateTriangleError
from biharm.mesh import Mesh, generate_lshape_mesh, generate_square_mesh, uniform_refine
from biharm.quadrature import triangle_rule
from biharm.system import DiscreteField, build_dofmap, interpolate
from conftest import randomly_refined, reference_mesh

BROKEN_NTW = replace(NTW, name="ntw-broken", share_dofs=False)


def sample_poly(mesh: Mesh, f, degree: int) -> Poly2:
    """Exact scaled-monomial representation of a polynomial ``f`` on every triangle."""
    P, c, h = triangle_frames(mesh)
    rule = triangle_rule(12)
    pts = map_points(P, rule.points)
    w = 2.0 * mesh.areas()[:, None] * rule.weights[None, :]
    return project_samples(f(pts[..., 0], pts[..., 1]), pts, w, c, h, degree)


def quad_data(mesh: Mesh, degree: int = 12):
    P, _, _ = triangle_frames(mesh)
    rule = triangle_rule(degree)
    pts = map_points(P, rule.points)
    return pts, 2.0 * mesh.areas()[:, None] * rule.weights[None, :]


@pytest.mark.parametrize("elem", [MORLEY, NTW])
def test_kronecker(elem, graded_square):
    basis = build_local_basis(elem, graded_square)
    P, c, h = triangle_frames(graded_square)
    F = elem.dof_matrix_on_monomials(P, c, h)
    G = np.einsum("tim,tjm->tij", F, basis.coeffs)
    assert np.abs(G - np.eye(elem.n_local)).max() < 1e-10
    assert basis.cond.max() < MAX_DOF_COND


def test_dof_counts():
    assert MORLEY.n_local == 6 and NTW.n_local == 9
    assert (MORLEY.degree, MORLEY.ell, NTW.degree, NTW.ell) == (2, 2, 4, 2)
    assert get_element("NTW") is NTW
    with pytest.raises(ValueError):
        get_element("specht")


def test_morley_reference_triangle():
    m = reference_mesh()
    b = build_local_basis(MORLEY, m)
    phi0 = b.function(0, 0)
    V = m.vertices
    vals = phi0(V)
    assert vals[0] == pytest.approx(1.0, abs=1e-14)
    assert np.abs(vals[1:]).max() < 1e-14
    # dual to the normal derivative on the hypotenuse (local edge 1: v1 -> v2)
    k = MORLEY.dofs.index(("normal", 1))
    P, c, h = triangle_frames(m)
    F = MORLEY.dof_matrix_on_monomials(P, c, h)[0]
    vals = F @ b.coeffs[0, k]
    expect = np.zeros(6)
    expect[k] = 1.0
    assert np.abs(vals - expect).max() < 1e-12


@pytest.mark.parametrize("elem", [MORLEY, NTW])
def test_quadratic_reproduction(elem, graded_square):
    m = graded_square
    cases = [
        (lambda x, y: x**2, lambda x, y: np.stack([2 * x, 0 * y], -1)),
        (lambda x, y: 1 - 3 * x * y + y**2 + 0.5 * x,
         lambda x, y: np.stack([-3 * y + 0.5, -3 * x + 2 * y], -1)),
    ]
    pts, _ = quad_data(m, 6)
    for u, g in cases:
        coeffs = interpolate(m, elem, u, g)
        uh = DiscreteField(m, elem, coeffs)
        P = uh.poly()
        assert np.abs(P(pts) - u(pts[..., 0], pts[..., 1])).max() < 1e-10
        gx = g(pts[..., 0], pts[..., 1])
        assert np.abs(P.derivative(pts, 1, 0) - gx[..., 0]).max() < 1e-9


def test_morley_hessians_constant(graded_square):
    b = build_local_basis(MORLEY, graded_square)
    pts, _ = quad_data(graded_square, 4)
    H = b.evaluate(pts, 2, 0)
    assert np.abs(H - H[:, :1]).max() < 1e-9 * np.abs(H).max()


def test_ntw_has_bubble_part():
    b = build_local_basis(NTW, reference_mesh())
    # the quartic coefficients of the normal-derivative duals do not vanish
    quartic = [i for i, (a, c) in enumerate(exponents(4)) if a + c == 4]
    assert np.abs(b.coeffs[0][:, quartic]).max() > 1e-3


def test_condition_number_scale_invariant():
    conds = []
    for s in (1.0, 1e-4, 1e-8):
        m = Mesh(reference_mesh().vertices * s, np.array([[0, 1, 2]]), np.zeros(1, dtype=np.int64))
        conds.append(build_local_basis(NTW, m).cond[0])
    assert np.allclose(conds, conds[0], rtol=1e-6)


def test_degenerate_triangle_rejected():
    V = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, 1e-11]])
    m = Mesh(V, np.array([[0, 1, 2]]), np.zeros(1, dtype=np.int64))
    with pytest.raises(DegenerateTriangleError) as info:
        build_local_basis(NTW, m)
    assert info.value.triangle == 0


# --------------------------------------------------------------------------
# weak continuity

@pytest.mark.parametrize("seed", [0, 1, 2])
def test_certification(seed):
    m = randomly_refined(generate_lshape_mesh(), 3, seed)
    ntw = certify_assumption(NTW, m, trials=4, rng=seed)
    morley = certify_assumption(MORLEY, m, trials=4, rng=seed)
    assert ntw.moment < 1e-12 and ntw.continuity < 1e-12 and ntw.passed()
    assert morley.moment < 1e-12 and morley.passed()
    assert morley.value_moment == 0.0
    assert morley.continuity > 1e-3           # Morley is not continuous


def test_certification_fine_mesh():
    m = uniform_refine(uniform_refine(generate_square_mesh(4)))
    assert certify_assumption(NTW, m, trials=2).moment < 1e-12
    assert certify_assumption(MORLEY, m, trials=2).moment < 1e-12


def test_broken_element_fails():
    m = randomly_refined(generate_square_mesh(2), 2, seed=5)
    c = certify_assumption(BROKEN_NTW, m, trials=3)
    assert c.moment > 1e-6
    assert not c.passed()


# --------------------------------------------------------------------------
# L2 projection

def test_project_quadratic_is_identity(graded_square):
    p = sample_poly(graded_square, lambda x, y: 1 + x - 2 * y + x * y - 3 * y**2, 2)
    P, _, _ = triangle_frames(graded_square)
    q = l2_project(p.padded(4), 2, P)
    assert np.abs(q.coeffs - p.coeffs).max() < 1e-12


def test_project_cubic_to_constant():
    m = reference_mesh()
    p = sample_poly(m, lambda x, y: x**3, 3)
    P, _, _ = triangle_frames(m)
    q = l2_project(p, 0, P)
    assert q(np.array([[[0.3, 0.3]]]))[0, 0] == pytest.approx(0.1, abs=1e-14)


def test_project_bubble_orthogonality():
    m = reference_mesh()
    b = sample_poly(m, lambda x, y: x * y * (1 - x - y), 3)
    P, _, _ = triangle_frames(m)
    q = l2_project(b, 2, P)
    pts, w = quad_data(m)
    r = b(pts) - q(pts)
    for a, c in exponents(2):
        test = pts[..., 0] ** a * pts[..., 1] ** c
        assert abs(np.sum(w * r * test)) < 1e-14
    # against a dense mass-matrix oracle in plain monomials
    E = exponents(2)
    x, y = pts[0, :, 0], pts[0, :, 1]
    B = np.array([x**a * y**c for a, c in E])
    M = (B * w[0]) @ B.T
    rhs = (B * w[0]) @ (x * y * (1 - x - y))
    ref = np.linalg.solve(M, rhs) @ B
    assert np.abs(q(pts)[0] - ref).max() < 1e-12


def test_projection_self_adjoint_and_contractive(graded_square):
    rng = np.random.default_rng(3)
    m = graded_square
    P, c, h = triangle_frames(m)
    p = Poly2(rng.standard_normal((m.n_triangles, n_monomials(4))), c, h, 4)
    q = Poly2(rng.standard_normal((m.n_triangles, n_monomials(4))), c, h, 4)
    pts, w = quad_data(m)
    Pp, Pq = l2_project(p, 2, P), l2_project(q, 2, P)
    lhs = np.sum(w * Pp(pts) * q(pts), axis=1)
    rhs = np.sum(w * p(pts) * Pq(pts), axis=1)
    assert np.abs(lhs - rhs).max() < 1e-12 * np.abs(lhs).max()
    assert np.all(np.sum(w * Pp(pts) ** 2, axis=1) <= np.sum(w * p(pts) ** 2, axis=1) * (1 + 1e-12))
    PPp = l2_project(Pp.padded(4), 2, P)
    assert np.abs(PPp.coeffs - Pp.coeffs).max() < 1e-10


def test_projection_degree_check():
    m = reference_mesh()
    p = sample_poly(m, lambda x, y: x, 1)
    with pytest.raises(ValueError):
        l2_project(p, 2, triangle_frames(m)[0])


def test_poly_multiply_matches_pointwise():
    rng = np.random.default_rng(0)
    c1 = rng.standard_normal(6)
    c2 = rng.standard_normal(3)
    prod = poly_multiply(c1, 2, c2, 1)
    pts = rng.uniform(-1, 1, (1, 7, 2))
    z = np.zeros(2)
    a = Poly2(c1, z, 1.0, 2)(pts[0])
    b = Poly2(c2, z, 1.0, 1)(pts[0])
    ab = Poly2(prod, z, 1.0, 3)(pts[0])
    assert np.allclose(ab, a * b, rtol=1e-13, atol=1e-13)


def test_poly_derivatives_of_known_quartic():
    # p = x^4 + x^2 y^2 around centre 0, h = 1
    E = exponents(4)
    c = np.zeros(len(E))
    c[E.index((4, 0))] = 1.0
    c[E.index((2, 2))] = 1.0
    p = Poly2(c, np.zeros(2), 1.0, 4)
    pts = np.array([[[0.3, -0.7], [1.1, 0.2]]])[0]
    assert np.allclose(p.bilaplacian(pts), 24.0 + 8.0)
    x, y = pts[:, 0], pts[:, 1]
    assert np.allclose(p.laplacian(pts), 12 * x**2 + 2 * y**2 + 2 * x**2)
    gl = p.grad_laplacian(pts)
    assert np.allclose(gl[:, 0], 28 * x) and np.allclose(gl[:, 1], 4 * y)
