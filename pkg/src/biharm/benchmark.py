"""Benchmark problems, energy errors and convergence records."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields
from typing import Callable, Optional

import numpy as np

from . import _lshape_generated as lg
from .element import DEFAULT_DEGREE, map_points
from .errors import ConfigurationError
from .mesh import Mesh, generate_lshape_mesh, generate_square_mesh
from .quadrature import triangle_rule
from .system import DiscreteField

Function = Callable[[np.ndarray, np.ndarray], np.ndarray]

R_MIN = 1e-14
CHUNK = 8192  # triangles per quadrature batch


@dataclass(frozen=True)
class ExactSolution:
    """Exact solution with its derivatives and the matching right-hand side.

    ``grad`` returns an array with trailing axis 2 and ``hess`` one with
    trailing axes (2, 2).
    """

    name: str
    u: Function
    grad: Callable
    hess: Callable
    f: Function
    eps: float
    alpha: int
    domain: str


@dataclass(frozen=True)
class Problem:
    """Data of one study: domain, parameters, load and (optionally) the exact solution."""

    name: str
    domain: str
    eps: float
    alpha: int
    f: Function
    exact: Optional[ExactSolution] = None


def initial_mesh(domain: str, n: int = 2) -> Mesh:
    if domain == "square":
        return generate_square_mesh(n)
    if domain == "lshape":
        return generate_lshape_mesh()
    raise ValueError(f"unknown domain {domain!r}")


def _stack_grad(gx, gy):
    return np.stack([gx, gy], axis=-1)


def _stack_hess(hxx, hxy, hyy):
    return np.stack([np.stack([hxx, hxy], -1), np.stack([hxy, hyy], -1)], -2)


# --------------------------------------------------------------------------
# L-shape biharmonic problem with corner singularity


def _polar(x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    r = np.maximum(np.hypot(x, y), R_MIN)
    t = np.arctan2(y, x)
    t = np.where(t < 0.0, t + 2.0 * np.pi, t)
    return r, t


def example1() -> ExactSolution:
    """Biharmonic problem on the L-shape with the corner singular solution (eps=1, alpha=0)."""

    def u(x, y):
        return lg.u(*_polar(x, y))

    def grad(x, y):
        r, t = _polar(x, y)
        return _stack_grad(lg.ux(r, t), lg.uy(r, t))

    def hess(x, y):
        r, t = _polar(x, y)
        return _stack_hess(lg.uxx(r, t), lg.uxy(r, t), lg.uyy(r, t))

    def f(x, y):
        return lg.bilap(*_polar(x, y))

    return ExactSolution("example1", u, grad, hess, f, eps=1.0, alpha=0, domain="lshape")


# --------------------------------------------------------------------------
# singularly perturbed problem with boundary layers on the unit square


def _layer_factor(x, eps):
    """Derivatives 0..4 of X(x) = sin(pi x) - pi eps (cosh(s) - cosh(z)) / sinh(s).

    ``s = 1/(2 eps)``, ``z = (2x - 1)/(2 eps)``; the hyperbolic ratios are
    written with non-positive exponents only so that small eps cannot overflow.
    """
    x = np.asarray(x, dtype=float)
    s = 0.5 / eps
    z = (2.0 * x - 1.0) * s
    az = np.abs(z)
    q = 1.0 / (-np.expm1(-2.0 * s))
    coth = (1.0 + np.exp(-2.0 * s)) * q
    ch = (np.exp(az - s) + np.exp(-az - s)) * q
    sh = np.sign(z) * (np.exp(az - s) - np.exp(-az - s)) * q
    pi = np.pi
    sp_, cp_ = np.sin(pi * x), np.cos(pi * x)
    return (
        sp_ - pi * eps * (coth - ch),
        pi * cp_ + pi * sh,
        -pi**2 * sp_ + pi / eps * ch,
        -pi**3 * cp_ + pi / eps**2 * sh,
        pi**4 * sp_ + pi / eps**3 * ch,
    )


def example2(eps: float = 1e-2) -> ExactSolution:
    """Separable boundary-layer solution on the unit square (alpha=1)."""
    if not (0.0 < eps <= 1.0):
        raise ValueError("eps must lie in (0, 1]")

    def u(x, y):
        return _layer_factor(x, eps)[0] * _layer_factor(y, eps)[0]

    def grad(x, y):
        X, Y = _layer_factor(x, eps), _layer_factor(y, eps)
        return _stack_grad(X[1] * Y[0], X[0] * Y[1])

    def hess(x, y):
        X, Y = _layer_factor(x, eps), _layer_factor(y, eps)
        return _stack_hess(X[2] * Y[0], X[1] * Y[1], X[0] * Y[2])

    def f(x, y):
        X, Y = _layer_factor(x, eps), _layer_factor(y, eps)
        bilap = X[4] * Y[0] + 2.0 * X[2] * Y[2] + X[0] * Y[4]
        lap = X[2] * Y[0] + X[0] * Y[2]
        return eps**2 * bilap - lap

    return ExactSolution("example2", u, grad, hess, f, eps=eps, alpha=1, domain="square")


# --------------------------------------------------------------------------
# L-shape load with a line singularity, no exact solution


def example3_f() -> Function:
    """f(x, y) = |x + y|^(-1/3); singular along x + y = 0."""

    def f(x, y):
        return np.maximum(np.abs(np.asarray(x) + np.asarray(y)), R_MIN) ** (-1.0 / 3.0)

    return f


# --------------------------------------------------------------------------
# smooth manufactured biharmonic problem


def manufactured() -> ExactSolution:
    """u = sin^2(pi x) sin^2(pi y) on the unit square, eps=1, alpha=0, f = bilaplacian(u)."""
    pi = np.pi

    def d(t):
        c2, s2 = np.cos(2 * pi * t), np.sin(2 * pi * t)
        return (np.sin(pi * t) ** 2, pi * s2, 2 * pi**2 * c2, -4 * pi**3 * s2, -8 * pi**4 * c2)

    def u(x, y):
        return d(x)[0] * d(y)[0]

    def grad(x, y):
        X, Y = d(x), d(y)
        return _stack_grad(X[1] * Y[0], X[0] * Y[1])

    def hess(x, y):
        X, Y = d(x), d(y)
        return _stack_hess(X[2] * Y[0], X[1] * Y[1], X[0] * Y[2])

    def f(x, y):
        X, Y = d(x), d(y)
        return X[4] * Y[0] + 2.0 * X[2] * Y[2] + X[0] * Y[4]

    return ExactSolution("manufactured", u, grad, hess, f, eps=1.0, alpha=0, domain="square")


def zero_solution(domain: str = "square", eps: float = 1.0, alpha: int = 0) -> ExactSolution:
    def zero(x, y):
        return np.zeros(np.broadcast_shapes(np.shape(x), np.shape(y)))

    def grad(x, y):
        return np.zeros(np.broadcast_shapes(np.shape(x), np.shape(y)) + (2,))

    def hess(x, y):
        return np.zeros(np.broadcast_shapes(np.shape(x), np.shape(y)) + (2, 2))

    return ExactSolution("zero", zero, grad, hess, zero, eps=eps, alpha=alpha, domain=domain)


def _fixed(name: str, value, given) -> None:
    if given is not None and given != value:
        raise ConfigurationError(f"{name} = {value} is fixed by this exact solution, got {given}")


def get_problem(example: str, eps: float | None = None, alpha: int | None = None,
                solution: str = "sin2") -> Problem:
    """Preset problem; ``eps`` and ``alpha`` override the preset where allowed.

    Presets whose load is built from a fixed exact solution (``example1`` and
    the ``sin2`` manufactured solution) refuse parameters other than their
    own; ``example2`` rebuilds its solution for the requested eps.
    """
    if example == "example1":
        ex = example1()
        _fixed("epsilon", ex.eps, eps)
        _fixed("alpha", ex.alpha, alpha)
        return Problem(example, ex.domain, ex.eps, ex.alpha, ex.f, ex)
    if example == "example2":
        if eps is not None and not (0.0 < eps <= 1.0):
            raise ConfigurationError("example2 needs epsilon in (0, 1]")
        ex = example2(1e-2 if eps is None else eps)
        _fixed("alpha", ex.alpha, alpha)
        return Problem(example, ex.domain, ex.eps, ex.alpha, ex.f, ex)
    if example == "example3":
        return Problem(example, "lshape", 1e-2 if eps is None else eps,
                       1 if alpha is None else alpha, example3_f(), None)
    if example == "manufactured":
        if solution == "zero":
            ex = zero_solution("square", 1.0 if eps is None else eps, 0 if alpha is None else alpha)
        elif solution == "sin2":
            ex = manufactured()
            _fixed("epsilon", ex.eps, eps)
            _fixed("alpha", ex.alpha, alpha)
        else:
            raise ConfigurationError(f"unknown manufactured solution {solution!r}")
        return Problem(example, ex.domain, ex.eps, ex.alpha, ex.f, ex)
    raise ConfigurationError(f"unknown example {example!r}")


# --------------------------------------------------------------------------
# errors and records


def energy_error(uh: DiscreteField, exact: ExactSolution, eps: float, alpha: int,
                 degree: int = DEFAULT_DEGREE) -> float:
    """Broken energy norm of ``u - u_h`` by per-triangle quadrature."""
    rule = triangle_rule(degree)
    areas = uh.mesh.areas()
    nt = uh.mesh.n_triangles
    total = 0.0
    for lo in range(0, nt, CHUNK):
        tris = np.arange(lo, min(lo + CHUNK, nt))
        pts = map_points(uh.basis.corners[tris], rule.points)
        w = 2.0 * areas[tris, None] * rule.weights[None, :]
        P = uh.poly(tris)
        x, y = pts[..., 0], pts[..., 1]
        dens = np.zeros_like(w)
        if eps > 0.0:
            H = np.asarray(exact.hess(x, y))
            dxx = H[..., 0, 0] - P.derivative(pts, 2, 0)
            dxy = H[..., 0, 1] - P.derivative(pts, 1, 1)
            dyy = H[..., 1, 1] - P.derivative(pts, 0, 2)
            dens += eps**2 * (dxx**2 + 2.0 * dxy**2 + dyy**2)
        if alpha:
            G = np.asarray(exact.grad(x, y))
            gx = G[..., 0] - P.derivative(pts, 1, 0)
            gy = G[..., 1] - P.derivative(pts, 0, 1)
            dens += alpha * (gx**2 + gy**2)
        total += float(np.sum(w * dens))
    return float(math.sqrt(max(total, 0.0)))


@dataclass(frozen=True)
class StudyRecord:
    """One row of a convergence history."""

    level: int
    ndof: int
    h_max: float
    energy_error: float
    eta: float
    mu0: float
    mu1: float
    mu2: float
    mu3: float
    xi: float
    osc: float
    effectivity: float

    def as_row(self) -> list[str]:
        out = []
        for name in CSV_COLUMNS:
            v = getattr(self, name)
            out.append(str(v) if isinstance(v, int) else repr(float(v)))
        return out

    def to_dict(self) -> dict:
        return asdict(self)


CSV_COLUMNS = tuple(f.name for f in fields(StudyRecord))


def loglog_slope(ndof, values, last: int | None = None) -> float:
    """Least-squares slope of ``log(values)`` against ``log(ndof)``.

    Only the final ``last`` pairs are used when given.  Needs at least two
    pairs with positive values.
    """
    n = np.asarray(ndof, dtype=float)
    v = np.asarray(values, dtype=float)
    if n.shape != v.shape:
        raise ValueError("ndof and values differ in length")
    if last is not None:
        if last < 2:
            raise ValueError("need last >= 2")
        n, v = n[-last:], v[-last:]
    if len(n) < 2:
        raise ValueError("need at least two rows to fit a slope")
    if np.any(n <= 0.0) or np.any(v <= 0.0):
        raise ValueError("log-log fit needs positive ndof and values")
    slope, _ = np.polyfit(np.log(n), np.log(v), 1)
    return float(slope)
