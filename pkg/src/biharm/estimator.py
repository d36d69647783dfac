"""Residual-based a posteriori error estimator for the clamped eps-biharmonic problem.

Notation follows the code, not any single source: for a discrete solution
``u_h`` and load ``f``

* ``mu0^2(T) = |||u_h - P u_h|||_T^2`` with ``P`` the L2 projection onto P_ell(T)
* ``mu1^2(T) = k_T^2 h_T^2 ||alpha lap u_h + f||_T^2``; with ``full_residual=True``
  the element residual ``eps^2 bilap u_h - alpha lap u_h - f`` is used instead
* ``mu2^2(F) = eps^3 k_F ||[D^2 u_h] n_F||_F^2``                 (interior F)
* ``mu3^2(F) = k_F^2 h_F ||[alpha grad u_h - eps^2 div D^2 u_h] . n_F||_F^2`` (interior F)
* ``xi^2(F)  = eps / k_F ||[grad u_h] . n_F||_F^2 + 1 / (eps k_F^3) ||[u_h]||_F^2``
* ``osc^2(T) = k_T^2 h_T^2 ||f - P f||_T^2``

with ``k = min(1, h / eps)`` and ``|||w|||^2 = eps^2 ||D^2 w||^2 + alpha ||grad w||^2``.
For eps = 0 all weights use ``k = 1`` and every eps-weighted term is dropped.

The bilaplacian of a quadratic vanishes, so ``bilap u_h = bilap(u_h - P u_h)``
and an inverse estimate gives ``k_T h_T eps^2 ||bilap u_h||_T <~ mu0(T)``.
Leaving that part out of ``mu1`` therefore yields an equivalent estimator; in
practice it removes large level-to-level fluctuations that the quartic bubbles
of the NTW element would otherwise inject into ``mu1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .element import (
    DEFAULT_DEGREE,
    ElementDef,
    l2_project,
    map_points,
    project_samples,
    triangle_frames,
)
from .errors import ConfigurationError
from .mesh import Mesh
from .quadrature import edge_rule, triangle_rule
from .system import DiscreteField, Function, check_admissible, evaluate_rhs

EDGE_DERIVS = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3))


def kappa(h: np.ndarray, eps: float) -> np.ndarray:
    """Comparison coefficient ``min(1, h / eps)``; identically 1 when eps = 0."""
    h = np.asarray(h, dtype=float)
    if eps == 0.0:
        return np.ones_like(h)
    return np.minimum(1.0, h / eps)


@dataclass(frozen=True, eq=False)
class EstimatorReport:
    """Squared estimator contributions per triangle and per edge.

    Triangle arrays have length ``nt``, edge arrays length ``ne``.  Boundary
    edges carry ``mu2_sq = mu3_sq = 0`` but a nonzero ``xi_sq`` in general.
    """

    mu0_sq: np.ndarray
    mu1_sq: np.ndarray
    osc_sq: np.ndarray
    mu2_sq: np.ndarray
    mu3_sq: np.ndarray
    xi_sq: np.ndarray
    eta_sq: np.ndarray

    @staticmethod
    def _root(a: np.ndarray) -> float:
        return math.sqrt(float(np.sum(a)))

    @property
    def mu0(self) -> float:
        return self._root(self.mu0_sq)

    @property
    def mu1(self) -> float:
        return self._root(self.mu1_sq)

    @property
    def mu2(self) -> float:
        return self._root(self.mu2_sq)

    @property
    def mu3(self) -> float:
        return self._root(self.mu3_sq)

    @property
    def xi(self) -> float:
        return self._root(self.xi_sq)

    @property
    def osc(self) -> float:
        return self._root(self.osc_sq)

    @property
    def eta(self) -> float:
        """Square root of the sum of the per-triangle indicators."""
        return self._root(self.eta_sq)

    @property
    def eta_sum(self) -> float:
        """``mu0 + mu1 + mu2 + mu3 + xi``, equivalent to :attr:`eta` up to a factor sqrt(5)."""
        return self.mu0 + self.mu1 + self.mu2 + self.mu3 + self.xi


def aggregate_per_triangle(mesh: Mesh, mu0_sq, mu1_sq, mu2_sq, mu3_sq, xi_sq) -> np.ndarray:
    """Per-triangle indicators: interior edge terms split half/half, boundary edges go to T+."""
    face = np.asarray(mu2_sq) + np.asarray(mu3_sq) + np.asarray(xi_sq)
    share = np.where(mesh.boundary, 1.0, 0.5) * face
    eta_sq = np.asarray(mu0_sq, dtype=float) + np.asarray(mu1_sq, dtype=float)
    eta_sq = eta_sq.copy()
    np.add.at(eta_sq, mesh.edge_tris[:, 0], share)
    inner = ~mesh.boundary
    np.add.at(eta_sq, mesh.edge_tris[inner, 1], share[inner])
    return eta_sq


CHUNK = 8192


def _chunks(n: int):
    """Index slices bounding the size of the ``(chunk, nq, nmonomials)`` temporaries."""
    size = CHUNK
    for lo in range(0, n, size):
        yield slice(lo, min(lo + size, n))


def _volume_terms(mesh, elem, eps, alpha, f, uh, degree, full_residual, tris):
    """``mu0^2``, ``mu1^2`` and ``osc^2`` on the triangles ``tris``."""
    rule = triangle_rule(degree)
    pts = map_points(uh.basis.corners[tris], rule.points)
    w = 2.0 * mesh.areas()[tris, None] * rule.weights[None, :]
    idx = np.arange(mesh.n_triangles)[tris]
    P = uh.poly(idx)
    h_T = uh.basis.h[tris]
    k_T = kappa(h_T, eps)

    if elem.ell >= elem.degree:
        mu0_sq = np.zeros(len(idx))
    else:
        proj = l2_project(P, elem.ell, uh.basis.corners[tris], degree)
        diff = P - proj
        dens = np.zeros_like(w)
        if eps > 0.0:
            dens += eps**2 * (diff.derivative(pts, 2, 0) ** 2 + 2.0 * diff.derivative(pts, 1, 1) ** 2
                              + diff.derivative(pts, 0, 2) ** 2)
        if alpha:
            dens += alpha * (diff.derivative(pts, 1, 0) ** 2 + diff.derivative(pts, 0, 1) ** 2)
        mu0_sq = np.sum(w * dens, axis=1)

    fv = evaluate_rhs(f, pts[..., 0], pts[..., 1])
    resid = -fv
    if full_residual and eps > 0.0:
        resid = resid + eps**2 * P.bilaplacian(pts)
    if alpha:
        resid = resid - alpha * P.laplacian(pts)
    mu1_sq = k_T**2 * h_T**2 * np.sum(w * resid**2, axis=1)
    osc_sq = _oscillation(fv, pts, w, uh.basis.center[tris], h_T, elem.ell, eps)
    return mu0_sq, mu1_sq, osc_sq


def _edge_terms(mesh, eps, alpha, uh, degree, edges):
    """``mu2^2``, ``mu3^2`` and ``xi^2`` on the edges ``edges``."""
    idx = np.arange(mesh.n_edges)[edges]
    er = edge_rule(degree)
    tr = uh.edge_traces(er.points, EDGE_DERIVS, idx)
    h_F = mesh.edge_lengths()[idx]
    k_F = kappa(h_F, eps)
    we = er.weights[None, :] * h_F[:, None]
    nx = mesh.normals[idx, 0, None]
    ny = mesh.normals[idx, 1, None]
    inner = ~mesh.boundary[idx]

    j = {d: tr.jump(d) for d in EDGE_DERIVS}
    hn_x = j[(2, 0)] * nx + j[(1, 1)] * ny
    hn_y = j[(1, 1)] * nx + j[(0, 2)] * ny
    gn = j[(1, 0)] * nx + j[(0, 1)] * ny
    gl_n = (j[(3, 0)] + j[(1, 2)]) * nx + (j[(2, 1)] + j[(0, 3)]) * ny

    mu2_sq = eps**3 * k_F * np.sum(we * (hn_x**2 + hn_y**2), axis=1)
    mu3_sq = k_F**2 * h_F * np.sum(we * (alpha * gn - eps**2 * gl_n) ** 2, axis=1)
    mu2_sq = np.where(inner, mu2_sq, 0.0)
    mu3_sq = np.where(inner, mu3_sq, 0.0)

    if eps > 0.0:
        xi_sq = (eps / k_F * np.sum(we * gn**2, axis=1)
                 + 1.0 / (eps * k_F**3) * np.sum(we * j[(0, 0)] ** 2, axis=1))
    else:
        xi_sq = np.zeros(len(idx))
    return mu2_sq, mu3_sq, xi_sq


def oscillation(mesh: Mesh, elem: ElementDef, eps: float, f: Function,
                degree: int = DEFAULT_DEGREE) -> np.ndarray:
    """Per-triangle data oscillation ``k_T^2 h_T^2 ||f - P_ell f||^2``."""
    P, c, h = triangle_frames(mesh)
    rule = triangle_rule(degree)
    pts = map_points(P, rule.points)
    w = 2.0 * mesh.areas()[:, None] * rule.weights[None, :]
    fv = evaluate_rhs(f, pts[..., 0], pts[..., 1])
    return _oscillation(fv, pts, w, c, h, elem.ell, eps)


def _oscillation(fv, pts, w, c, h, ell, eps):
    proj = project_samples(fv, pts, w, c, h, ell)
    r = fv - proj.derivative(pts)
    k = kappa(h, eps)
    return k**2 * h**2 * np.sum(w * r**2, axis=1)


def estimate(mesh: Mesh, elem: ElementDef, eps: float, alpha: int, f: Function,
             uh: DiscreteField, degree: int = DEFAULT_DEGREE,
             full_residual: bool = False) -> EstimatorReport:
    """Evaluate every estimator contribution for the discrete solution ``uh``.

    ``full_residual`` adds ``eps^2 bilap u_h`` to the volume residual of ``mu1``.
    """
    check_admissible(elem, eps, alpha)
    if eps == 0.0 and not elem.continuous:
        raise ConfigurationError("eps = 0 needs a C0 element (the value-jump weight is 1/eps)")

    nt, ne = mesh.n_triangles, mesh.n_edges
    mu0_sq, mu1_sq, osc_sq = np.zeros(nt), np.zeros(nt), np.zeros(nt)
    for tris in _chunks(nt):
        mu0_sq[tris], mu1_sq[tris], osc_sq[tris] = _volume_terms(
            mesh, elem, eps, alpha, f, uh, degree, full_residual, tris)
    mu2_sq, mu3_sq, xi_sq = np.zeros(ne), np.zeros(ne), np.zeros(ne)
    for edges in _chunks(ne):
        mu2_sq[edges], mu3_sq[edges], xi_sq[edges] = _edge_terms(
            mesh, eps, alpha, uh, degree, edges)

    eta_sq = aggregate_per_triangle(mesh, mu0_sq, mu1_sq, mu2_sq, mu3_sq, xi_sq)
    return EstimatorReport(mu0_sq, mu1_sq, osc_sq, mu2_sq, mu3_sq, xi_sq, eta_sq)
