"""Morley and Nilssen-Tai-Winther (NTW) elements.

Polynomials are stored in the monomial basis of the scaled local coordinates
``(x - c_T) / h_T``, where ``c_T`` is the centroid and ``h_T`` the diameter of
the triangle.  Nodal bases are built on each physical triangle by inverting the
local DOF matrix; normal-derivative functionals are not affine invariant, so no
reference-element pullback is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

import numpy as np

from .errors import DegenerateTriangleError
from .mesh import LOCAL_EDGES, Mesh
from .quadrature import edge_rule, triangle_rule

DEFAULT_DEGREE = 8
MAX_DOF_COND = 1e8


# --------------------------------------------------------------------------
# scaled monomials


@lru_cache(maxsize=None)
def exponents(degree: int) -> tuple[tuple[int, int], ...]:
    """Exponents ``(a, b)`` of the monomials of total degree <= ``degree``, graded."""
    return tuple((a, k - a) for k in range(degree + 1) for a in range(k, -1, -1))


def n_monomials(degree: int) -> int:
    return (degree + 1) * (degree + 2) // 2


def _falling(n: int, k: int) -> int:
    return factorial(n) // factorial(n - k) if k <= n else 0


def monomial_derivatives(xi: np.ndarray, eta: np.ndarray, degree: int,
                         dx: int = 0, dy: int = 0) -> np.ndarray:
    """``d^dx/dxi^dx d^dy/deta^dy`` of every monomial, shape ``xi.shape + (nm,)``."""
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    out = np.zeros(xi.shape + (n_monomials(degree),))
    pow_x = [np.ones_like(xi)]
    pow_y = [np.ones_like(eta)]
    for _ in range(degree):
        pow_x.append(pow_x[-1] * xi)
        pow_y.append(pow_y[-1] * eta)
    for m, (a, b) in enumerate(exponents(degree)):
        if a < dx or b < dy:
            continue
        out[..., m] = _falling(a, dx) * _falling(b, dy) * pow_x[a - dx] * pow_y[b - dy]
    return out


def _embed(coeffs: np.ndarray, degree: int, target: int) -> np.ndarray:
    """Re-express coefficients of a degree-``degree`` polynomial in the degree-``target`` basis."""
    if degree == target:
        return coeffs
    if degree > target:
        raise ValueError("cannot embed into a lower degree")
    out = np.zeros(coeffs.shape[:-1] + (n_monomials(target),))
    out[..., : n_monomials(degree)] = coeffs
    return out


def poly_multiply(c1: np.ndarray, d1: int, c2: np.ndarray, d2: int) -> np.ndarray:
    """Coefficients of the product of two (batched) polynomials, degree ``d1 + d2``."""
    index = {e: i for i, e in enumerate(exponents(d1 + d2))}
    out = np.zeros(np.broadcast_shapes(c1.shape[:-1], c2.shape[:-1]) + (n_monomials(d1 + d2),))
    for i, (a1, b1) in enumerate(exponents(d1)):
        for j, (a2, b2) in enumerate(exponents(d2)):
            out[..., index[(a1 + a2, b1 + b2)]] += c1[..., i] * c2[..., j]
    return out


@dataclass(frozen=True, eq=False)
class Poly2:
    """Bivariate polynomial(s) in scaled local monomials.

    Leading axes of ``coeffs``, ``center`` and ``h`` are batch axes, so one
    ``Poly2`` can hold one polynomial per triangle.  Evaluation points carry one
    extra axis for the points: ``points.shape == batch + (nq, 2)``.
    """

    coeffs: np.ndarray
    center: np.ndarray
    h: np.ndarray
    degree: int

    def local(self, points: np.ndarray) -> np.ndarray:
        c = np.asarray(self.center)[..., None, :]
        h = np.asarray(self.h)[..., None, None]
        return (np.asarray(points) - c) / h

    def derivative(self, points: np.ndarray, dx: int = 0, dy: int = 0) -> np.ndarray:
        loc = self.local(points)
        M = monomial_derivatives(loc[..., 0], loc[..., 1], self.degree, dx, dy)
        scale = np.asarray(self.h, dtype=float)[..., None] ** (dx + dy)
        return np.einsum("...qm,...m->...q", M, self.coeffs) / scale

    def __call__(self, points: np.ndarray) -> np.ndarray:
        return self.derivative(points)

    def grad(self, points: np.ndarray) -> np.ndarray:
        return np.stack([self.derivative(points, 1, 0), self.derivative(points, 0, 1)], axis=-1)

    def hessian(self, points: np.ndarray) -> np.ndarray:
        xx = self.derivative(points, 2, 0)
        xy = self.derivative(points, 1, 1)
        yy = self.derivative(points, 0, 2)
        return np.stack([np.stack([xx, xy], -1), np.stack([xy, yy], -1)], -2)

    def laplacian(self, points: np.ndarray) -> np.ndarray:
        return self.derivative(points, 2, 0) + self.derivative(points, 0, 2)

    def grad_laplacian(self, points: np.ndarray) -> np.ndarray:
        """``div D^2 p = grad(Laplacian p)``."""
        gx = self.derivative(points, 3, 0) + self.derivative(points, 1, 2)
        gy = self.derivative(points, 2, 1) + self.derivative(points, 0, 3)
        return np.stack([gx, gy], axis=-1)

    def bilaplacian(self, points: np.ndarray) -> np.ndarray:
        return (self.derivative(points, 4, 0) + 2.0 * self.derivative(points, 2, 2)
                + self.derivative(points, 0, 4))

    def padded(self, degree: int) -> Poly2:
        return Poly2(_embed(self.coeffs, self.degree, degree), self.center, self.h, degree)

    def _combine(self, other: Poly2, sign: float) -> Poly2:
        d = max(self.degree, other.degree)
        a = _embed(self.coeffs, self.degree, d)
        b = _embed(other.coeffs, other.degree, d)
        return Poly2(a + sign * b, self.center, self.h, d)

    def __add__(self, other: Poly2) -> Poly2:
        return self._combine(other, 1.0)

    def __sub__(self, other: Poly2) -> Poly2:
        return self._combine(other, -1.0)

    def __mul__(self, s: float) -> Poly2:
        return Poly2(self.coeffs * s, self.center, self.h, self.degree)

    __rmul__ = __mul__


# --------------------------------------------------------------------------
# triangle geometry helpers


def triangle_frames(mesh: Mesh, tris: np.ndarray | None = None):
    """Corner coordinates, centroids and diameters of the selected triangles."""
    if tris is None:
        tris = np.arange(mesh.n_triangles)
    P = mesh.vertices[mesh.triangles[tris]]
    c = P.mean(axis=1)
    d = P[:, LOCAL_EDGES[:, 1]] - P[:, LOCAL_EDGES[:, 0]]
    h = np.linalg.norm(d, axis=2).max(axis=1)
    return P, c, h


def barycentric_polys(P: np.ndarray, c: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Coefficients of the barycentric coordinates in scaled monomials, shape ``(n, 3, 3)``."""
    n = len(P)
    M = np.ones((n, 3, 3))
    M[:, 0, :] = P[:, :, 0]
    M[:, 1, :] = P[:, :, 1]
    Minv = np.linalg.inv(M)
    coeffs = np.empty((n, 3, 3))
    coeffs[:, :, 0] = np.einsum("nij,nj->ni", Minv, np.column_stack([c, np.ones(n)]))
    coeffs[:, :, 1] = h[:, None] * Minv[:, :, 0]
    coeffs[:, :, 2] = h[:, None] * Minv[:, :, 1]
    return coeffs


def map_points(P: np.ndarray, bary: np.ndarray) -> np.ndarray:
    """Physical points ``(n, nq, 2)`` of barycentric points ``(nq, 3)`` on triangles ``P``."""
    return np.einsum("qi,nid->nqd", bary, P)


def outward_normals(P: np.ndarray) -> np.ndarray:
    """Unit outward normals of the three local edges, shape ``(n, 3, 2)``."""
    d = P[:, LOCAL_EDGES[:, 1]] - P[:, LOCAL_EDGES[:, 0]]
    nrm = np.stack([d[..., 1], -d[..., 0]], axis=-1)
    return nrm / np.linalg.norm(nrm, axis=-1, keepdims=True)


# --------------------------------------------------------------------------
# element definitions


@dataclass(frozen=True)
class ElementDef:
    """A nonconforming triangle element.

    ``dofs`` lists the local functionals as ``(kind, entity)`` with kind one of
    ``"vertex"`` (point value at a vertex), ``"midpoint"`` (point value at an
    edge midpoint) or ``"normal"`` (edge average of the outward normal
    derivative).  ``share_dofs=False`` gives every triangle its own
    normal-derivative unknowns, a deliberately broken space used as a negative
    control for the weak-continuity checks.
    """

    name: str
    degree: int
    ell: int
    dofs: tuple[tuple[str, int], ...]
    continuous: bool
    alphas: tuple[int, ...]
    share_dofs: bool = field(default=True)

    @property
    def n_local(self) -> int:
        return len(self.dofs)

    def shape_coeffs(self, P: np.ndarray, c: np.ndarray, h: np.ndarray) -> np.ndarray:
        """Coefficients of a (non-nodal) spanning set of the shape space, ``(n, ndof, nm)``."""
        n = len(P)
        nm = n_monomials(self.degree)
        quad = np.zeros((n, 6, nm))
        quad[:, np.arange(6), np.arange(6)] = 1.0
        if self.n_local == 6:
            return quad
        lam = barycentric_polys(P, c, h)
        bubble = poly_multiply(poly_multiply(lam[:, 0], 1, lam[:, 1], 1), 2, lam[:, 2], 1)
        extra = np.stack([poly_multiply(bubble, 3, lam[:, i], 1) for i in range(3)], axis=1)
        # Bubble functions are O(1/27); rescale so all spanning functions are O(1).
        return np.concatenate([quad, 27.0 * _embed(extra, 4, self.degree)], axis=1)

    def dof_matrix_on_monomials(self, P: np.ndarray, c: np.ndarray, h: np.ndarray) -> np.ndarray:
        """Local functionals applied to each scaled monomial, ``(n, ndof, nm)``."""
        n = len(P)
        L = self.degree
        out = np.empty((n, self.n_local, n_monomials(L)))
        er = edge_rule(DEFAULT_DEGREE)
        nrm = outward_normals(P)
        for i, (kind, k) in enumerate(self.dofs):
            if kind == "vertex":
                loc = (P[:, k] - c) / h[:, None]
                out[:, i] = monomial_derivatives(loc[:, 0], loc[:, 1], L)
            elif kind == "midpoint":
                a, b = LOCAL_EDGES[k]
                loc = (0.5 * (P[:, a] + P[:, b]) - c) / h[:, None]
                out[:, i] = monomial_derivatives(loc[:, 0], loc[:, 1], L)
            elif kind == "normal":
                a, b = LOCAL_EDGES[k]
                pts = P[:, a, None, :] + er.points[None, :, None] * (P[:, b] - P[:, a])[:, None, :]
                loc = (pts - c[:, None, :]) / h[:, None, None]
                gx = monomial_derivatives(loc[..., 0], loc[..., 1], L, 1, 0)
                gy = monomial_derivatives(loc[..., 0], loc[..., 1], L, 0, 1)
                dn = gx * nrm[:, k, 0, None, None] + gy * nrm[:, k, 1, None, None]
                out[:, i] = np.einsum("q,nqm->nm", er.weights, dn) / h[:, None]
            else:
                raise ValueError(f"unknown functional {kind!r}")
        return out


_VERTS = tuple(("vertex", k) for k in range(3))
_MIDS = tuple(("midpoint", k) for k in range(3))
_NORMALS = tuple(("normal", k) for k in range(3))

MORLEY = ElementDef("morley", degree=2, ell=2, dofs=_VERTS + _NORMALS,
                    continuous=False, alphas=(0,))
NTW = ElementDef("ntw", degree=4, ell=2, dofs=_VERTS + _MIDS + _NORMALS,
                 continuous=True, alphas=(0, 1))

ELEMENTS = {"morley": MORLEY, "ntw": NTW}


def get_element(name: str) -> ElementDef:
    try:
        return ELEMENTS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown element {name!r}; choose from {sorted(ELEMENTS)}") from None


# --------------------------------------------------------------------------
# nodal bases


@dataclass(frozen=True, eq=False)
class LocalBasis:
    """Nodal basis functions on a batch of triangles.

    ``coeffs[t, i]`` holds the scaled-monomial coefficients of the basis
    function dual to local functional ``i`` on triangle ``tris[t]``.
    """

    elem: ElementDef
    tris: np.ndarray
    coeffs: np.ndarray
    center: np.ndarray
    h: np.ndarray
    corners: np.ndarray
    cond: np.ndarray

    def __len__(self) -> int:
        return len(self.tris)

    def function(self, t: int, i: int) -> Poly2:
        return Poly2(self.coeffs[t, i], self.center[t], self.h[t], self.elem.degree)

    def polys(self) -> Poly2:
        """All basis functions as one batch of shape ``(n, ndof)``."""
        return Poly2(self.coeffs, self.center[:, None, :], self.h[:, None], self.elem.degree)

    def evaluate(self, points: np.ndarray, dx: int = 0, dy: int = 0) -> np.ndarray:
        """Derivatives of all basis functions at points ``(n, nq, 2)``, shape ``(n, nq, ndof)``."""
        loc = (points - self.center[:, None, :]) / self.h[:, None, None]
        M = monomial_derivatives(loc[..., 0], loc[..., 1], self.elem.degree, dx, dy)
        return np.einsum("nqm,nim->nqi", M, self.coeffs) / self.h[:, None, None] ** (dx + dy)


def build_local_basis(elem: ElementDef, mesh: Mesh, t: int | np.ndarray | None = None) -> LocalBasis:
    """Nodal basis on triangle ``t`` (an index, an index array, or all triangles)."""
    if t is None:
        tris = np.arange(mesh.n_triangles)
    else:
        tris = np.atleast_1d(np.asarray(t, dtype=np.int64))
    P, c, h = triangle_frames(mesh, tris)
    S = elem.shape_coeffs(P, c, h)
    F = elem.dof_matrix_on_monomials(P, c, h)
    D = np.einsum("nim,njm->nij", F, S)
    # derivative functionals carry a 1/h; remove it so the check is scale invariant
    order = np.array([1.0 if kind == "normal" else 0.0 for kind, _ in elem.dofs])
    cond = np.linalg.cond(D * h[:, None, None] ** order[None, :, None])
    bad = ~np.isfinite(cond) | (cond > MAX_DOF_COND)
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        raise DegenerateTriangleError(int(tris[k]), float(cond[k]))
    A = np.swapaxes(np.linalg.inv(D), 1, 2)
    coeffs = np.einsum("nij,njm->nim", A, S)
    return LocalBasis(elem, tris, coeffs, c, h, P, cond)


# --------------------------------------------------------------------------
# L2 projection


def _mass_and_moments(poly: Poly2, ell: int, corners: np.ndarray, degree: int):
    rule = triangle_rule(min(2 * max(poly.degree, ell), 12) if degree is None else degree)
    pts = map_points(corners, rule.points)
    P = corners
    area = 0.5 * np.abs((P[:, 1, 0] - P[:, 0, 0]) * (P[:, 2, 1] - P[:, 0, 1])
                        - (P[:, 1, 1] - P[:, 0, 1]) * (P[:, 2, 0] - P[:, 0, 0]))
    w = 2.0 * area[:, None] * rule.weights[None, :]
    loc = (pts - poly.center[:, None, :]) / poly.h[:, None, None]
    B = monomial_derivatives(loc[..., 0], loc[..., 1], ell)
    vals = poly.derivative(pts)
    mass = np.einsum("nq,nqi,nqj->nij", w, B, B)
    rhs = np.einsum("nq,nqi,nq->ni", w, B, vals)
    return mass, rhs


def l2_project(poly: Poly2, ell: int, corners: np.ndarray, degree: int | None = None) -> Poly2:
    """L2(T)-orthogonal projection of ``poly`` onto P_ell(T).

    ``poly`` is a batch over triangles (``coeffs`` of shape ``(n, nm)``) or a
    single polynomial; ``corners`` holds the matching triangle vertices.
    """
    single = np.ndim(poly.coeffs) == 1
    if single:
        poly = Poly2(poly.coeffs[None], np.asarray(poly.center)[None],
                     np.atleast_1d(poly.h), poly.degree)
        corners = np.asarray(corners)[None]
    if ell > poly.degree:
        raise ValueError("projection degree exceeds polynomial degree")
    mass, rhs = _mass_and_moments(poly, ell, np.asarray(corners, dtype=float), degree)
    coeffs = np.linalg.solve(mass, rhs[..., None])[..., 0]
    out = Poly2(coeffs, poly.center, poly.h, ell)
    if single:
        out = Poly2(coeffs[0], poly.center[0], poly.h[0], ell)
    return out


def project_samples(values: np.ndarray, points: np.ndarray, weights: np.ndarray,
                    center: np.ndarray, h: np.ndarray, ell: int) -> Poly2:
    """L2 projection onto P_ell of data known only at quadrature points.

    ``values`` and ``weights`` have shape ``(n, nq)`` (weights include the
    triangle Jacobian), ``points`` shape ``(n, nq, 2)``.
    """
    loc = (points - center[:, None, :]) / h[:, None, None]
    B = monomial_derivatives(loc[..., 0], loc[..., 1], ell)
    mass = np.einsum("nq,nqi,nqj->nij", weights, B, B)
    rhs = np.einsum("nq,nqi,nq->ni", weights, B, values)
    coeffs = np.linalg.solve(mass, rhs[..., None])[..., 0]
    return Poly2(coeffs, center, h, ell)


# --------------------------------------------------------------------------
# weak continuity certification


@dataclass(frozen=True)
class Certification:
    """Largest weak-continuity residuals found by :func:`certify_assumption`.

    ``moment`` is the largest gradient-jump moment against P_{ell-2}(F)
    (both normal and tangential test directions), ``value_moment`` the largest
    value-jump moment against P_{ell-3}(F) (identically zero when ell = 2) and
    ``continuity`` the largest pointwise value jump on interior edges.
    """

    element: str
    continuous: bool
    moment: float
    value_moment: float
    continuity: float
    n_edges: int
    trials: int

    def passed(self, tol: float = 1e-10) -> bool:
        ok = self.moment < tol and self.value_moment < tol
        return bool(ok and (self.continuity < tol if self.continuous else True))


def _legendre_edge_basis(t: np.ndarray, degree: int) -> np.ndarray:
    """Legendre polynomials on [0, 1] up to ``degree`` at ``t``, shape ``(degree+1, nq)``."""
    if degree < 0:
        return np.zeros((0, len(t)))
    return np.array([np.polynomial.legendre.Legendre.basis(k)(2 * t - 1) for k in range(degree + 1)])


def certify_assumption(elem: ElementDef, mesh: Mesh, trials: int = 5,
                       rng: np.random.Generator | int | None = 0) -> Certification:
    """Measure the jump moment conditions for random functions of the discrete space.

    Random coefficient vectors with clamped boundary DOFs set to zero are
    drawn; on every edge the moments of the gradient jump against P_{ell-2}(F)
    and of the value jump against P_{ell-3}(F) are integrated with a degree-8
    edge rule.  Boundary edges use the one-sided trace.
    """
    from .system import DiscreteField, build_dofmap

    rng = np.random.default_rng(rng)
    dofmap = build_dofmap(mesh, elem)
    basis = build_local_basis(elem, mesh)
    er = edge_rule(DEFAULT_DEGREE)
    q_grad = _legendre_edge_basis(er.points, elem.ell - 2)
    q_val = _legendre_edge_basis(er.points, elem.ell - 3)
    lengths = mesh.edge_lengths()
    tangents = mesh.vertices[mesh.edges[:, 1]] - mesh.vertices[mesh.edges[:, 0]]
    tangents /= lengths[:, None]
    interior = ~mesh.boundary

    moment = value_moment = continuity = 0.0
    for _ in range(trials):
        u = rng.standard_normal(dofmap.n)
        u[dofmap.boundary] = 0.0
        field_ = DiscreteField(mesh, elem, u, dofmap, basis)
        tr = field_.edge_traces(er.points, derivs=((0, 0), (1, 0), (0, 1)))
        jump_v = tr.jump((0, 0))
        jump_g = np.stack([tr.jump((1, 0)), tr.jump((0, 1))], axis=-1)
        w = er.weights[None, :] * lengths[:, None]
        for dirs in (mesh.normals, tangents):
            jn = np.einsum("eqd,ed->eq", jump_g, dirs)
            if len(q_grad):
                m = np.einsum("eq,kq,eq->ek", w, q_grad, jn)
                moment = max(moment, float(np.abs(m).max(initial=0.0)))
        if len(q_val):
            m = np.einsum("eq,kq,eq->ek", w, q_val, jump_v)
            value_moment = max(value_moment, float(np.abs(m).max(initial=0.0)))
        if interior.any():
            continuity = max(continuity, float(np.abs(jump_v[interior]).max()))
    return Certification(elem.name, elem.continuous, moment, value_moment, continuity, mesh.n_edges, trials)
