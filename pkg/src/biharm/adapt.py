"""Doerfler marking and the solve-estimate-mark-refine loop."""

from __future__ import annotations

import logging
import os
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np
from threadpoolctl import threadpool_limits

from .benchmark import StudyRecord, energy_error, initial_mesh
from .config import StudyConfig
from .errors import ConfigurationError, NothingToMark
from .estimator import EstimatorReport, estimate
from .mesh import Mesh, refine, uniform_refine
from .system import DiscreteField, solve_problem

log = logging.getLogger(__name__)

THREADS_ENV = "BIHARM_THREADS"


def dorfler_mark(indicators, theta: float) -> np.ndarray:
    """Smallest set of triangles carrying a ``theta`` share of the total indicator.

    Triangles are taken in order of decreasing indicator, ties broken by
    ascending index, so the result is deterministic.  Returns sorted indices.
    """
    eta = np.asarray(indicators, dtype=float)
    if eta.ndim != 1:
        raise ValueError("indicators must be one-dimensional")
    if not (0.0 < theta <= 1.0):
        raise ValueError(f"theta must lie in (0, 1], got {theta}")
    if np.any(eta < 0.0) or not np.all(np.isfinite(eta)):
        raise ValueError("indicators must be finite and nonnegative")
    if not np.any(eta > 0.0):
        raise NothingToMark("all indicators vanish: converged, nothing to mark")
    order = np.lexsort((np.arange(eta.size), -eta))
    csum = np.cumsum(eta[order])
    goal = theta * csum[-1]
    k = int(np.searchsorted(csum, goal, side="left")) + 1
    if theta == 1.0:
        # take every positive indicator even if the running sum saturates early
        k = max(k, int(np.count_nonzero(eta)))
    return np.sort(order[:k])


@dataclass
class AfemState:
    """Current iterate of the adaptive loop."""

    mesh: Mesh
    uh: Optional[DiscreteField] = None
    report: Optional[EstimatorReport] = None
    level: int = 0
    history: list[StudyRecord] = field(default_factory=list)


def thread_count() -> Optional[int]:
    """Worker cap from ``BIHARM_THREADS``; ``None`` means no cap (0 or unset)."""
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return None
    try:
        n = int(raw)
    except ValueError:
        raise ConfigurationError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ConfigurationError(f"{THREADS_ENV} must be >= 0")
    return n or None


@contextmanager
def _thread_limits() -> Iterator[None]:
    n = thread_count()
    if n is None:
        yield
    else:
        with threadpool_limits(limits=n):
            yield


def _record(state: AfemState, config: StudyConfig) -> StudyRecord:
    pb = config.problem()
    rep = state.report
    err = 0.0
    if pb.exact is not None:
        err = energy_error(state.uh, pb.exact, pb.eps, pb.alpha, config.quadrature_degree)
    eff = rep.eta / err if err > 0.0 else 0.0
    return StudyRecord(
        level=state.level,
        ndof=state.uh.dofmap.n_free,
        h_max=state.mesh.h_max(),
        energy_error=err,
        eta=rep.eta,
        mu0=rep.mu0,
        mu1=rep.mu1,
        mu2=rep.mu2,
        mu3=rep.mu3,
        xi=rep.xi,
        osc=rep.osc,
        effectivity=eff,
    )


def afem_iter(config: StudyConfig, mesh: Mesh | None = None) -> Iterator[AfemState]:
    """Yield the state after every solve and estimate."""
    pb = config.problem()
    elem = config.elem
    state = AfemState(mesh if mesh is not None else initial_mesh(pb.domain, config.initial_n))
    while True:
        state.uh = solve_problem(state.mesh, elem, pb.eps, pb.alpha, pb.f, config.quadrature_degree)
        state.report = estimate(state.mesh, elem, pb.eps, pb.alpha, pb.f, state.uh,
                                config.quadrature_degree, config.full_residual)
        rec = _record(state, config)
        state.history.append(rec)
        log.info("level %d ndof %d eta %.4e err %.4e", rec.level, rec.ndof, rec.eta,
                 rec.energy_error)
        yield state
        if rec.ndof >= config.max_ndof or len(state.history) >= config.max_level:
            return
        if config.mode == "uniform":
            if not np.any(state.report.eta_sq > 0.0):
                return
            state.mesh = uniform_refine(state.mesh)
        else:
            try:
                marked = dorfler_mark(state.report.eta_sq, config.theta)
            except NothingToMark:
                log.info("estimator vanishes; stopping at level %d", state.level)
                return
            state.mesh = refine(state.mesh, marked)
        state.level += 1


def afem_loop(config: StudyConfig, mesh: Mesh | None = None) -> list[StudyRecord]:
    """Run the study and return one record per level."""
    state = None
    with _thread_limits():
        for state in afem_iter(config, mesh):
            pass
    return list(state.history) if state is not None else []
