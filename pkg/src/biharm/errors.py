"""Exception types raised by the solver."""


class ConfigurationError(ValueError):
    """Inadmissible combination of element, epsilon and alpha, or a bad study config."""


class DegenerateTriangleError(ValueError):
    """The local DOF matrix of a triangle is singular."""

    def __init__(self, triangle: int, cond: float):
        super().__init__(f"degenerate triangle {triangle}: DOF matrix condition number {cond:.3e}")
        self.triangle = triangle
        self.cond = cond


class SolverError(RuntimeError):
    """Linear solve broke down or the matrix is not positive definite."""


class NothingToMark(ValueError):
    """All refinement indicators vanish."""
