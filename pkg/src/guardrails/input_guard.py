"""Validation guardrails applied to run configurations before dispatch."""

from app.core.config import get_config
from app.core.logging import get_logger
from src.exceptions import HyperbolicError

logger = get_logger(__name__)


class InputGuardError(HyperbolicError):
    """Raised when a run configuration fails guardrail validation."""

    condition = "invalid input"


class InputGuard:
    """Checks intervals, grid sizes, tolerances and degrees against configured limits."""

    def __init__(self):
        guardrails = get_config().guardrails
        self.max_degree = guardrails.max_degree
        self.max_grid = guardrails.max_grid

    def check_intervals(self, I0: tuple[float, float], I1: tuple[float, float]) -> None:
        """Require I0 strictly inside I1.

        Raises:
            InputGuardError: If either interval is empty or I0 touches the boundary of I1.
        """
        (a0, b0), (a1, b1) = I0, I1
        if not (a0 < b0 and a1 < b1):
            raise InputGuardError(f"empty interval: I0={I0}, I1={I1}")
        if not (a1 < a0 and b0 < b1):
            logger.warning("intervals_not_nested", I0=I0, I1=I1)
            raise InputGuardError(f"I0={I0} must lie strictly inside I1={I1}")

    def check_grid(self, n: int) -> None:
        if not 1 <= n <= self.max_grid:
            raise InputGuardError(f"grid size {n} outside [1, {self.max_grid}]")

    def check_tol(self, tol: float) -> None:
        if not tol > 0:
            raise InputGuardError(f"tol must be positive, got {tol}")

    def check_degree(self, degree: int) -> None:
        if not 1 <= degree <= self.max_degree:
            raise InputGuardError(f"degree {degree} outside [1, {self.max_degree}]")

    def check_p(self, p: int, degree: int) -> None:
        if p != degree and not 2 <= p < degree:
            raise InputGuardError(f"p={p} must equal n={degree} or satisfy 2 <= p < n")
