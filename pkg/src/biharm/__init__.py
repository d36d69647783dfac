"""Adaptive nonconforming finite elements for the clamped eps-biharmonic problem.

    eps^2 bilap u - alpha lap u = f  in a polygon,  u = du/dn = 0  on the boundary,

discretised with the Morley or the Nilssen-Tai-Winther element, a residual a
posteriori estimator, Doerfler marking and newest-vertex bisection.
"""

from .adapt import AfemState, afem_loop, dorfler_mark
from .benchmark import (
    CSV_COLUMNS,
    ExactSolution,
    Problem,
    StudyRecord,
    energy_error,
    example1,
    example2,
    example3_f,
    get_problem,
    loglog_slope,
    manufactured,
)
from .config import StudyConfig
from .element import MORLEY, NTW, ElementDef, certify_assumption, get_element, l2_project
from .errors import ConfigurationError, DegenerateTriangleError, NothingToMark, SolverError
from .estimator import EstimatorReport, aggregate_per_triangle, estimate, kappa, oscillation
from .mesh import Mesh, generate_lshape_mesh, generate_square_mesh, refine, uniform_refine
from .quadrature import QuadRule, edge_rule, triangle_rule
from .system import DiscreteField, assemble, interpolate, solve, solve_problem

__version__ = "0.1.0"

__all__ = [
    "AfemState", "CSV_COLUMNS", "ConfigurationError", "DegenerateTriangleError", "DiscreteField",
    "ElementDef", "EstimatorReport", "ExactSolution", "MORLEY", "Mesh", "NTW", "NothingToMark",
    "Problem", "QuadRule", "SolverError", "StudyConfig", "StudyRecord", "afem_loop",
    "aggregate_per_triangle", "assemble", "certify_assumption", "dorfler_mark", "edge_rule",
    "energy_error", "estimate", "example1", "example2", "example3_f", "generate_lshape_mesh",
    "generate_square_mesh", "get_element", "get_problem", "interpolate", "kappa", "l2_project",
    "loglog_slope", "manufactured", "oscillation", "refine", "solve", "solve_problem",
    "triangle_rule", "uniform_refine",
]
