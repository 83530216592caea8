"""One-sided derivatives of root branches and the C^1 diagnostics built on them."""

from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np

from app.core.logging import get_logger
from src.curves.curve import CoeffCurve, eval_curve
from src.realroots.roots import ordered_roots
from src.tracking.tracks import sample_grid, track_matched

logger = get_logger(__name__)


@dataclass(frozen=True)
class MatchedBranch:
    """Matched branch identified by its rank at the left end of a local grid around t0."""

    index: int


BranchSelector = int | MatchedBranch


@dataclass
class DerivativeDiagnostics:
    t0: float
    left: float | None
    right: float | None
    richardson_orders: list[dict] = field(default_factory=list)
    converged: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def _steps(h0: float, halvings: int) -> list[float]:
    return [h0 / 2**j for j in range(halvings)]


def _branch_function(
    curve: CoeffCurve, selector: BranchSelector, t0: float, h0: float, halvings: int, tol: float
) -> Callable[[float], float]:
    if isinstance(selector, MatchedBranch):
        lo, hi = curve.domain
        left = t0 - h0 if t0 - h0 >= lo else t0
        right = t0 + h0 if t0 + h0 <= hi else t0
        if left == right:
            return lambda t: ordered_roots(eval_curve(curve, t), tol=tol, certify=False).values[selector.index]
        # every evaluation point t0 +- h0/2^j is a node of this grid
        spacing = h0 / 2 ** (halvings + 1)
        grid = sample_grid((left, right), int(round((right - left) / spacing)))
        tracks = track_matched(curve, grid, tol=tol, certify=False)
        branch = tracks.branches[selector.index]

        def value(t: float) -> float:
            return float(branch[int(np.argmin(np.abs(grid - t)))])

        return value

    def value(t: float) -> float:
        return ordered_roots(eval_curve(curve, t), tol=tol, certify=False).values[selector]

    return value


def _richardson(quotients: list[float]) -> list[float]:
    """First-order extrapolation R = 2 D(h/2) - D(h) for successive halvings."""
    return [2.0 * b - a for a, b in zip(quotients[:-1], quotients[1:])]


def one_sided_derivatives(
    curve: CoeffCurve,
    selector: BranchSelector,
    t0: float,
    h0: float = 1e-3,
    tol: float = 1e-4,
    halvings: int = 4,
    root_tol: float = 1e-10,
) -> DerivativeDiagnostics:
    """Left and right derivatives of a branch at t0 by extrapolated one-sided quotients.

    A side whose evaluation points leave the domain is reported as None. Non-convergence
    is reported through ``converged``, never raised.
    """
    if h0 <= 0:
        raise ValueError("h0 must be positive")
    f = _branch_function(curve, selector, t0, h0, halvings, root_tol)
    f0 = f(t0)
    lo, hi = curve.domain
    steps = _steps(h0, halvings)
    orders: list[dict] = []
    estimates: dict[str, float | None] = {"left": None, "right": None}
    converged = []
    for side, sign in (("left", -1.0), ("right", 1.0)):
        if not lo <= t0 + sign * h0 <= hi:
            continue
        quotients = [sign * (f(t0 + sign * h) - f0) / h for h in steps]
        extrapolated = _richardson(quotients)
        for h, q, r in zip(steps, quotients, [None] + extrapolated):
            orders.append({"side": side, "h": h, "quotient": q, "richardson": r})
        estimates[side] = extrapolated[-1] if extrapolated else quotients[-1]
        if len(extrapolated) >= 2:
            converged.append(abs(extrapolated[-1] - extrapolated[-2]) < tol)
        else:
            converged.append(False)
    return DerivativeDiagnostics(
        t0=float(t0),
        left=estimates["left"],
        right=estimates["right"],
        richardson_orders=orders,
        converged=bool(converged) and all(converged),
    )


@dataclass
class C1Point:
    t0: float
    branch: int
    left: float | None
    right: float | None
    left_limit: float | None
    right_limit: float | None
    mismatch: float


@dataclass
class C1Report:
    points: list[C1Point]
    checks_converged: int
    checks_total: int
    max_mismatch: float
    c1_tol: float

    @property
    def existence_ok(self) -> bool:
        return self.checks_converged == self.checks_total

    @property
    def continuous(self) -> bool:
        return self.max_mismatch <= self.c1_tol

    def to_dict(self) -> dict:
        data = asdict(self)
        data["existence_ok"] = self.existence_ok
        data["continuous"] = self.continuous
        return data


def _limit_from(
    curve: CoeffCurve, branch: int, t0: float, h0: float, side: float, levels: int, tol: float
) -> float | None:
    """Derivative at t0 - eps (side -1) or t0 + eps (side +1) for the finest eps, probing toward t0."""
    lo, hi = curve.domain
    eps = h0 / 2**levels
    t = t0 + side * eps
    if not lo <= t <= hi:
        return None
    d = one_sided_derivatives(curve, branch, t, h0=eps / 4, tol=tol)
    return d.right if side < 0 else d.left


def c1_report(
    curve: CoeffCurve,
    grid: Sequence[float],
    t0_list: Sequence[float],
    branches: Sequence[int] | None = None,
    h0: float = 1e-3,
    tol: float = 1e-4,
    c1_tol: float = 1e-2,
    levels: int = 4,
) -> C1Report:
    """Check existence of one-sided derivatives on ``grid`` and their one-sided continuity at each t0.

    At t0 the left derivative is compared with the derivative just left of t0
    (and likewise on the right); the largest difference is ``max_mismatch``.
    """
    if branches is None:
        branches = list(range(curve.degree))
    converged = total = 0
    for t in grid:
        for j in branches:
            total += 1
            converged += one_sided_derivatives(curve, j, float(t), h0=h0, tol=tol).converged

    points = []
    worst = 0.0
    for t0 in t0_list:
        for j in branches:
            d = one_sided_derivatives(curve, j, float(t0), h0=h0, tol=tol)
            left_limit = _limit_from(curve, j, float(t0), h0, -1.0, levels, tol)
            right_limit = _limit_from(curve, j, float(t0), h0, 1.0, levels, tol)
            mismatch = 0.0
            if d.left is not None and left_limit is not None:
                mismatch = max(mismatch, abs(left_limit - d.left))
            if d.right is not None and right_limit is not None:
                mismatch = max(mismatch, abs(right_limit - d.right))
            worst = max(worst, mismatch)
            points.append(C1Point(float(t0), j, d.left, d.right, left_limit, right_limit, mismatch))
    logger.info("c1_report_done", points=len(points), checks=total, converged=converged, max_mismatch=worst)
    return C1Report(
        points=points, checks_converged=converged, checks_total=total, max_mismatch=worst, c1_tol=c1_tol
    )
