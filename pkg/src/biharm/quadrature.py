"""Quadrature rules on the reference triangle and the reference edge.

Triangle rules are collapsed (Duffy) tensor products of Gauss-Jacobi and
Gauss-Legendre rules.  They need a few more points than Dunavant's tables but
have strictly positive weights, interior points and are available for every
degree without tabulated data.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi

MAX_DEGREE = 12


@dataclass(frozen=True)
class QuadRule:
    """Points and weights of a quadrature rule.

    For triangle rules ``points`` holds barycentric coordinates with shape
    ``(n, 3)`` and the weights sum to 1/2, the area of the reference triangle
    with vertices (0, 0), (1, 0), (0, 1).  For edge rules ``points`` holds the
    parameter ``t`` in [0, 1] with shape ``(n,)`` and the weights sum to 1.
    """

    points: np.ndarray
    weights: np.ndarray
    degree: int

    def __len__(self) -> int:
        return len(self.weights)


def _check_degree(degree: int) -> None:
    if not (1 <= int(degree) <= MAX_DEGREE) or int(degree) != degree:
        raise ValueError(f"unsupported quadrature degree {degree!r} (1..{MAX_DEGREE})")


@lru_cache(maxsize=None)
def edge_rule(degree: int) -> QuadRule:
    """Gauss-Legendre rule on [0, 1] exact for polynomials of the given degree."""
    _check_degree(degree)
    n = degree // 2 + 1
    x, w = np.polynomial.legendre.leggauss(n)
    t = 0.5 * (x + 1.0)
    pts = np.ascontiguousarray(t)
    wts = np.ascontiguousarray(0.5 * w)
    pts.setflags(write=False)
    wts.setflags(write=False)
    return QuadRule(pts, wts, int(degree))


@lru_cache(maxsize=None)
def triangle_rule(degree: int) -> QuadRule:
    """Collapsed Gauss rule on the reference triangle, exact to ``degree``."""
    _check_degree(degree)
    n = degree // 2 + 1
    # Gauss-Jacobi with weight (1 - s) absorbs the Duffy Jacobian.
    sj, wj = roots_jacobi(n, 1.0, 0.0)
    sl, wl = np.polynomial.legendre.leggauss(n)
    u = 0.5 * (sj + 1.0)
    wu = wj / 4.0
    v = 0.5 * (sl + 1.0)
    wv = 0.5 * wl
    uu, vv = np.meshgrid(u, v, indexing="ij")
    x = uu.ravel()
    y = (vv * (1.0 - uu)).ravel()
    w = np.outer(wu, wv).ravel()
    bary = np.column_stack([1.0 - x - y, x, y])
    bary.setflags(write=False)
    w.setflags(write=False)
    return QuadRule(bary, w, int(degree))
