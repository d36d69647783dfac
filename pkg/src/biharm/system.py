"""Global DOF numbering, assembly of the discrete bilinear form and the SPD solve."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .element import (
    DEFAULT_DEGREE,
    ElementDef,
    LocalBasis,
    Poly2,
    build_local_basis,
    map_points,
    monomial_derivatives,
)
from .errors import ConfigurationError, SolverError
from .mesh import Mesh
from .quadrature import edge_rule, triangle_rule

log = logging.getLogger(__name__)

Function = Callable[[np.ndarray, np.ndarray], np.ndarray]

CHUNK = 4096
ROUNDING_FACTOR = 100.0


def check_admissible(elem: ElementDef, eps: float, alpha: int) -> None:
    """Reject (element, epsilon, alpha) combinations the estimator does not cover."""
    if alpha not in (0, 1):
        raise ConfigurationError(f"alpha must be 0 or 1, got {alpha!r}")
    if not (0.0 <= eps <= 1.0):
        raise ConfigurationError(f"epsilon must lie in [0, 1], got {eps!r}")
    if alpha not in elem.alphas:
        raise ConfigurationError(f"element {elem.name} does not support alpha={alpha}")
    if eps == 0.0 and not (alpha == 1 and elem.continuous):
        raise ConfigurationError("epsilon = 0 requires alpha = 1 and a C0 element")


def evaluate_rhs(f: Function, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.broadcast_to(np.asarray(f(x, y), dtype=float), np.shape(x))


# --------------------------------------------------------------------------
# DOF map


@dataclass(frozen=True, eq=False)
class DofMap:
    """Local-to-global DOF map.

    Global numbering: vertex values, then edge-midpoint values (NTW only),
    then edge-average normal derivatives taken along the edge normal
    ``mesh.normals``.  ``cell_signs`` is -1 where a triangle's outward normal
    is opposite to the edge normal.
    """

    n: int
    cell_dofs: np.ndarray
    cell_signs: np.ndarray
    boundary: np.ndarray
    free: np.ndarray

    @property
    def n_free(self) -> int:
        return len(self.free)


def build_dofmap(mesh: Mesh, elem: ElementDef) -> DofMap:
    nv, ne, nt = mesh.n_vertices, mesh.n_edges, mesh.n_triangles
    has_mid = any(kind == "midpoint" for kind, _ in elem.dofs)
    off_mid = nv
    off_nrm = nv + (ne if has_mid else 0)
    n = off_nrm + (ne if elem.share_dofs else 3 * nt)

    cell_dofs = np.empty((nt, elem.n_local), dtype=np.int64)
    cell_signs = np.ones((nt, elem.n_local))
    tids = np.arange(nt)
    for i, (kind, k) in enumerate(elem.dofs):
        if kind == "vertex":
            cell_dofs[:, i] = mesh.triangles[:, k]
        elif kind == "midpoint":
            cell_dofs[:, i] = off_mid + mesh.tri_edges[:, k]
        elif elem.share_dofs:
            e = mesh.tri_edges[:, k]
            cell_dofs[:, i] = off_nrm + e
            cell_signs[:, i] = np.where(mesh.edge_tris[e, 0] == tids, 1.0, -1.0)
        else:
            cell_dofs[:, i] = off_nrm + 3 * tids + k

    bnd_edges = np.flatnonzero(mesh.boundary)
    bnd = [mesh.boundary_vertices()]
    if has_mid:
        bnd.append(off_mid + bnd_edges)
    if elem.share_dofs:
        bnd.append(off_nrm + bnd_edges)
    else:
        on_bnd = mesh.boundary[mesh.tri_edges]
        t, k = np.nonzero(on_bnd)
        bnd.append(off_nrm + 3 * t + k)
    boundary = np.unique(np.concatenate(bnd))
    mask = np.ones(n, dtype=bool)
    mask[boundary] = False
    return DofMap(n, cell_dofs, cell_signs, boundary, np.flatnonzero(mask))


def interpolate(mesh: Mesh, elem: ElementDef, u: Function, grad_u: Callable,
                dofmap: DofMap | None = None) -> np.ndarray:
    """Apply the global DOF functionals to a smooth function.

    ``grad_u(x, y)`` returns an array with trailing axis 2.  Normal-derivative
    averages use a degree-8 edge rule along the edge normals.
    """
    dofmap = dofmap or build_dofmap(mesh, elem)
    if not elem.share_dofs:
        raise ValueError("interpolation needs a conforming DOF identification")
    out = np.zeros(dofmap.n)
    V = mesh.vertices
    out[: mesh.n_vertices] = u(V[:, 0], V[:, 1])
    a = V[mesh.edges[:, 0]]
    b = V[mesh.edges[:, 1]]
    has_mid = any(kind == "midpoint" for kind, _ in elem.dofs)
    off = mesh.n_vertices
    if has_mid:
        m = 0.5 * (a + b)
        out[off: off + mesh.n_edges] = u(m[:, 0], m[:, 1])
        off += mesh.n_edges
    er = edge_rule(DEFAULT_DEGREE)
    pts = a[:, None, :] + er.points[None, :, None] * (b - a)[:, None, :]
    g = np.asarray(grad_u(pts[..., 0], pts[..., 1]))
    dn = np.einsum("eqd,ed->eq", g, mesh.normals)
    out[off: off + mesh.n_edges] = dn @ er.weights
    return out


# --------------------------------------------------------------------------
# discrete fields


@dataclass(frozen=True, eq=False)
class EdgeTraces:
    """Derivatives of a discrete field on both sides of every edge.

    ``plus[d]`` and ``minus[d]`` have shape ``(ne, nq)``; ``minus`` is zero on
    boundary edges so that ``jump`` follows the one-sided boundary convention.
    """

    points: np.ndarray
    plus: dict
    minus: dict
    boundary: np.ndarray

    def jump(self, d: tuple[int, int]) -> np.ndarray:
        return self.plus[d] - self.minus[d]


class DiscreteField:
    """A finite element function: global coefficients plus per-triangle polynomials."""

    def __init__(self, mesh: Mesh, elem: ElementDef, coeffs: np.ndarray,
                 dofmap: DofMap | None = None, basis: LocalBasis | None = None):
        self.mesh = mesh
        self.elem = elem
        self.dofmap = dofmap or build_dofmap(mesh, elem)
        self.basis = basis or build_local_basis(elem, mesh)
        self.coeffs = np.asarray(coeffs, dtype=float)
        if self.coeffs.shape != (self.dofmap.n,):
            raise ValueError("coefficient vector does not match the DOF map")
        local = self.coeffs[self.dofmap.cell_dofs] * self.dofmap.cell_signs
        self.local_coeffs = np.einsum("ti,tim->tm", local, self.basis.coeffs)

    def poly(self, tris: np.ndarray | None = None) -> Poly2:
        if tris is None:
            return Poly2(self.local_coeffs, self.basis.center, self.basis.h, self.elem.degree)
        tris = np.asarray(tris)
        return Poly2(self.local_coeffs[tris], self.basis.center[tris], self.basis.h[tris],
                     self.elem.degree)

    def evaluate(self, bary: np.ndarray, dx: int = 0, dy: int = 0) -> np.ndarray:
        """Derivative at barycentric points ``(nq, 3)`` in every triangle: ``(nt, nq)``."""
        pts = map_points(self.basis.corners, bary)
        return self.poly().derivative(pts, dx, dy)

    def edge_traces(self, t: np.ndarray, derivs=((0, 0),),
                    edges: np.ndarray | None = None) -> EdgeTraces:
        """Traces at parameters ``t`` along every edge (or the given ones), from ``T+`` and ``T-``."""
        m = self.mesh
        edges = np.arange(m.n_edges) if edges is None else np.asarray(edges)
        a = m.vertices[m.edges[edges, 0]]
        b = m.vertices[m.edges[edges, 1]]
        pts = a[:, None, :] + np.asarray(t)[None, :, None] * (b - a)[:, None, :]
        plus_t = m.edge_tris[edges, 0]
        minus_t = m.edge_tris[edges, 1]
        inner = minus_t >= 0
        pp = self.poly(plus_t)
        pm = self.poly(minus_t[inner])
        plus, minus = {}, {}
        for d in derivs:
            plus[d] = pp.derivative(pts, *d)
            vals = np.zeros_like(plus[d])
            vals[inner] = pm.derivative(pts[inner], *d)
            minus[d] = vals
        return EdgeTraces(pts, plus, minus, m.boundary[edges])

    def __mul__(self, s: float) -> DiscreteField:
        return DiscreteField(self.mesh, self.elem, s * self.coeffs, self.dofmap, self.basis)

    __rmul__ = __mul__


# --------------------------------------------------------------------------
# assembly


@dataclass(frozen=True, eq=False)
class AssembledSystem:
    """Stiffness matrix and load vector, before and after clamping.

    ``matrix`` and ``rhs`` are restricted to the free DOFs; ``full_matrix``
    and ``full_rhs`` keep every DOF.
    """

    matrix: sp.csr_matrix
    rhs: np.ndarray
    full_matrix: sp.csr_matrix
    full_rhs: np.ndarray
    dofmap: DofMap
    basis: LocalBasis


def local_matrices(basis: LocalBasis, eps: float, alpha: int) -> np.ndarray:
    """Element matrices of eps^2 (D^2 u, D^2 v) + alpha (grad u, grad v), shape ``(nt, n, n)``."""
    L = basis.elem.degree
    rule = triangle_rule(max(2 * (L - 1), 1))
    nt, n = basis.coeffs.shape[:2]
    out = np.empty((nt, n, n))
    for s in range(0, nt, CHUNK):
        sl = slice(s, s + CHUNK)
        sub = LocalBasis(basis.elem, basis.tris[sl], basis.coeffs[sl], basis.center[sl],
                         basis.h[sl], basis.corners[sl], basis.cond[sl])
        P = sub.corners
        area = 0.5 * np.abs((P[:, 1, 0] - P[:, 0, 0]) * (P[:, 2, 1] - P[:, 0, 1])
                            - (P[:, 1, 1] - P[:, 0, 1]) * (P[:, 2, 0] - P[:, 0, 0]))
        w = 2.0 * area[:, None] * rule.weights[None, :]
        pts = map_points(P, rule.points)
        K = np.zeros((len(area), n, n))
        if eps > 0.0:
            hxx = sub.evaluate(pts, 2, 0)
            hxy = sub.evaluate(pts, 1, 1)
            hyy = sub.evaluate(pts, 0, 2)
            K += eps**2 * (np.einsum("tq,tqi,tqj->tij", w, hxx, hxx)
                           + 2.0 * np.einsum("tq,tqi,tqj->tij", w, hxy, hxy)
                           + np.einsum("tq,tqi,tqj->tij", w, hyy, hyy))
        if alpha:
            gx = sub.evaluate(pts, 1, 0)
            gy = sub.evaluate(pts, 0, 1)
            K += alpha * (np.einsum("tq,tqi,tqj->tij", w, gx, gx)
                          + np.einsum("tq,tqi,tqj->tij", w, gy, gy))
        out[sl] = 0.5 * (K + np.swapaxes(K, 1, 2))
    return out


def local_loads(basis: LocalBasis, f: Function, degree: int = DEFAULT_DEGREE) -> np.ndarray:
    rule = triangle_rule(degree)
    nt, n = basis.coeffs.shape[:2]
    out = np.empty((nt, n))
    for s in range(0, nt, CHUNK):
        sl = slice(s, s + CHUNK)
        P = basis.corners[sl]
        area = 0.5 * np.abs((P[:, 1, 0] - P[:, 0, 0]) * (P[:, 2, 1] - P[:, 0, 1])
                            - (P[:, 1, 1] - P[:, 0, 1]) * (P[:, 2, 0] - P[:, 0, 0]))
        w = 2.0 * area[:, None] * rule.weights[None, :]
        pts = map_points(P, rule.points)
        fv = evaluate_rhs(f, pts[..., 0], pts[..., 1])
        loc = (pts - basis.center[sl, None, :]) / basis.h[sl, None, None]
        M = monomial_derivatives(loc[..., 0], loc[..., 1], basis.elem.degree)
        phi = np.einsum("tqm,tim->tqi", M, basis.coeffs[sl])
        out[sl] = np.einsum("tq,tq,tqi->ti", w, fv, phi)
    return out


def assemble(mesh: Mesh, elem: ElementDef, eps: float, alpha: int, f: Function,
             degree: int = DEFAULT_DEGREE, dofmap: DofMap | None = None,
             basis: LocalBasis | None = None) -> AssembledSystem:
    """Assemble the clamped discrete problem.

    The stiffness integrand is polynomial and is integrated exactly; the load
    uses a degree-``degree`` rule.  Clamped DOFs are removed by row and column
    elimination, which keeps the reduced matrix symmetric.
    """
    check_admissible(elem, eps, alpha)
    dofmap = dofmap or build_dofmap(mesh, elem)
    basis = basis or build_local_basis(elem, mesh)
    K = local_matrices(basis, eps, alpha)
    F = local_loads(basis, f, degree)
    sg = dofmap.cell_signs
    K = K * sg[:, :, None] * sg[:, None, :]
    F = F * sg
    dofs = dofmap.cell_dofs
    n = dofmap.n
    rows = np.repeat(dofs, dofs.shape[1], axis=1).ravel()
    cols = np.tile(dofs, (1, dofs.shape[1])).ravel()
    A = sp.coo_matrix((K.ravel(), (rows, cols)), shape=(n, n)).tocsr()
    A.sum_duplicates()
    b = np.zeros(n)
    np.add.at(b, dofs.ravel(), F.ravel())
    free = dofmap.free
    Af = A[free][:, free].tocsr()
    return AssembledSystem(Af, b[free], A, b, dofmap, basis)


# --------------------------------------------------------------------------
# solve


def solve(A: sp.spmatrix, b: np.ndarray, tol: float = 1e-10, max_refine: int = 4) -> np.ndarray:
    """Direct sparse solve of an SPD system with symmetric diagonal scaling.

    A few steps of iterative refinement are applied until
    ``||A x - b|| <= tol * max(1, ||b||)``.  On large, badly conditioned
    systems that target can lie below the double-precision rounding floor
    ``~ u ||(|A| |x|)||``; a warning is logged only when the residual exceeds
    both the target and a small multiple of that floor.
    """
    b = np.asarray(b, dtype=float)
    n = A.shape[0]
    if n == 0:
        return np.zeros(0)
    if not np.any(b):
        return np.zeros(n)
    A = sp.csc_matrix(A)
    d = A.diagonal()
    if np.any(d <= 0.0) or not np.all(np.isfinite(d)):
        raise SolverError("matrix has a non-positive diagonal entry; not SPD")
    s = 1.0 / np.sqrt(d)
    S = sp.diags(s)
    As = sp.csc_matrix(S @ A @ S)
    try:
        lu = spla.splu(As, permc_spec="MMD_AT_PLUS_A", diag_pivot_thresh=0.0,
                       options={"SymmetricMode": True})
    except RuntimeError as exc:
        raise SolverError(f"factorisation failed: {exc}") from exc
    target = tol * max(1.0, float(np.linalg.norm(b)))
    x = s * lu.solve(s * b)
    for _ in range(max_refine):
        r = b - A @ x
        if np.linalg.norm(r) <= target:
            break
        x = x + s * lu.solve(s * r)
    if not np.all(np.isfinite(x)):
        raise SolverError("solve produced non-finite values")
    if float(b @ x) <= 0.0:
        raise SolverError("b^T A^-1 b <= 0; matrix is not positive definite")
    res = float(np.linalg.norm(b - A @ x))
    floor = ROUNDING_FACTOR * np.finfo(float).eps * float(np.linalg.norm(abs(A) @ np.abs(x)))
    if res > max(target, floor):
        log.warning("linear residual %.3e exceeds target %.3e (rounding floor %.3e)",
                    res, target, floor)
    return x


def solve_problem(mesh: Mesh, elem: ElementDef, eps: float, alpha: int, f: Function,
                  degree: int = DEFAULT_DEGREE) -> DiscreteField:
    """Assemble, solve and reinsert the clamped zeros."""
    system = assemble(mesh, elem, eps, alpha, f, degree)
    x = solve(system.matrix, system.rhs)
    u = np.zeros(system.dofmap.n)
    u[system.dofmap.free] = x
    return DiscreteField(mesh, elem, u, system.dofmap, system.basis)
