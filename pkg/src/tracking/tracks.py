"""Root tracks over a time grid: ordered roots, matched branches and Lipschitz estimates."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from app.core.logging import get_logger
from src.curves.curve import CoeffCurve, Interval, eval_curve
from src.curves.norms import real_zeros
from src.exceptions import InvalidN, NotHyperbolic
from src.realroots.roots import ordered_roots

logger = get_logger(__name__)


@dataclass
class RootTracks:
    """``branches[j][k]`` is branch j at ``grid[k]``."""

    grid: np.ndarray
    branches: np.ndarray
    mode: str
    max_residual: float

    @property
    def degree(self) -> int:
        return self.branches.shape[0]

    def to_rows(self) -> list[list[float]]:
        return [[float(t)] + [float(v) for v in self.branches[:, k]] for k, t in enumerate(self.grid)]

    def header(self) -> list[str]:
        return ["t"] + [f"branch_{j + 1}" for j in range(self.degree)]


@dataclass
class LipschitzEstimate:
    per_branch: list[float]
    overall: float


@dataclass
class SegmentedLipschitz:
    breakpoints: list[float]
    per_segment: list[float]
    overall: float


def sample_grid(interval: Interval, N: int) -> np.ndarray:
    """N + 1 equispaced nodes t_k = lo + k (hi - lo) / N."""
    if N < 1:
        raise InvalidN(f"N={N}")
    lo, hi = float(interval[0]), float(interval[1])
    grid = lo + np.arange(N + 1) * (hi - lo) / N
    grid[-1] = hi
    return grid


def _roots_matrix(curve: CoeffCurve, grid: Sequence[float], tol: float, certify: bool) -> tuple[np.ndarray, float]:
    rows, residual = [], 0.0
    for t in grid:
        try:
            roots = ordered_roots(eval_curve(curve, float(t)), tol=tol, certify=certify)
        except NotHyperbolic as exc:
            logger.warning("track_node_not_hyperbolic", t=float(t))
            raise NotHyperbolic(f"at t={float(t)!r} ({exc.detail})") from exc
        rows.append(roots.values)
        residual = max(residual, roots.residual)
    return np.array(rows), residual


def track_ordered(
    curve: CoeffCurve, grid: Sequence[float], tol: float = 1e-10, certify: bool = True
) -> RootTracks:
    """Branch j at each node is the j-th smallest root."""
    grid = np.asarray(grid, dtype=float)
    roots, residual = _roots_matrix(curve, grid, tol, certify)
    return RootTracks(grid=grid, branches=roots.T.copy(), mode="ordered", max_residual=residual)


def _extrapolate(times: np.ndarray, values: np.ndarray, t: float) -> np.ndarray:
    """Lagrange extrapolation of each column of ``values`` (rows at ``times``) to t."""
    out = np.zeros(values.shape[1])
    for i, ti in enumerate(times):
        weight = 1.0
        for j, tj in enumerate(times):
            if j != i:
                weight *= (t - tj) / (ti - tj)
        out += weight * values[i]
    return out


def _match_step(predicted: np.ndarray, previous: np.ndarray, roots: np.ndarray, tie_eps: float) -> np.ndarray:
    """Assign the sorted ``roots`` to branches; returns the new branch values."""
    cost = np.abs(predicted[:, None] - roots[None, :])
    rows, cols = linear_sum_assignment(cost)
    optimal = float(cost[rows, cols].sum())
    # rank-preserving candidate: the r-th lowest branch takes the r-th lowest root
    order = np.argsort(previous, kind="stable")
    ranked = np.empty(len(roots))
    ranked[order] = roots
    rank_cost = float(np.abs(predicted - ranked).sum())
    if rank_cost <= optimal + tie_eps * (1.0 + np.max(np.abs(roots))):
        return ranked
    values = np.empty(len(roots))
    values[rows] = roots[cols]
    return values


def track_matched(
    curve: CoeffCurve,
    grid: Sequence[float],
    tol: float = 1e-10,
    certify: bool = True,
    tie_eps: float = 1e-12,
) -> RootTracks:
    """Continue branches from the ordered roots at the first node by optimal assignment.

    Each branch is extrapolated from its last three nodes (fewer at the start)
    and the roots at the next node are matched to the predictions by a
    minimum total absolute difference assignment.
    """
    grid = np.asarray(grid, dtype=float)
    roots, residual = _roots_matrix(curve, grid, tol, certify)
    branches = np.empty_like(roots)
    branches[0] = roots[0]
    for k in range(1, len(grid)):
        start = max(0, k - 3)
        predicted = _extrapolate(grid[start:k], branches[start:k], grid[k])
        branches[k] = _match_step(predicted, branches[k - 1], roots[k], tie_eps)
    return RootTracks(grid=grid, branches=branches.T.copy(), mode="matched", max_residual=residual)


def empirical_lipschitz(tracks: RootTracks) -> LipschitzEstimate:
    """Largest difference quotient between consecutive nodes, per branch and overall."""
    if len(tracks.grid) < 2:
        raise ValueError("need at least 2 grid nodes")
    dt = np.diff(tracks.grid)
    quotients = np.abs(np.diff(tracks.branches, axis=1)) / dt
    per_branch = [float(q) for q in quotients.max(axis=1)]
    return LipschitzEstimate(per_branch=per_branch, overall=max(per_branch))


def lipschitz_by_segments(
    curve: CoeffCurve, grid: Sequence[float], tol: float = 1e-10, certify: bool = True
) -> SegmentedLipschitz:
    """Ordered-root Lipschitz constants between consecutive zeros of a~_2.

    The zeros are inserted as grid nodes so that every consecutive pair of
    nodes lies in a single segment.
    """
    grid = np.asarray(grid, dtype=float)
    lo, hi = float(grid[0]), float(grid[-1])
    snap = 1e-12 * max(1.0, hi - lo)
    zeros = sorted(z for z in real_zeros(curve.a2, (lo, hi)) if np.min(np.abs(grid - z)) > snap)
    merged = np.unique(np.concatenate((grid, zeros)))
    tracks = track_ordered(curve, merged, tol=tol, certify=certify)

    cuts = [lo] + [z for z in real_zeros(curve.a2, (lo, hi)) if lo < z < hi] + [hi]
    cuts = sorted(set(cuts))
    # nodes snapped to a nearby grid point still split the segments there
    edges = [int(np.argmin(np.abs(merged - c))) for c in cuts]
    edges = sorted(set(edges))
    per_segment = []
    for a, b in zip(edges[:-1], edges[1:]):
        if b - a < 1:
            continue
        segment = RootTracks(
            grid=merged[a : b + 1], branches=tracks.branches[:, a : b + 1], mode="ordered", max_residual=0.0
        )
        per_segment.append(empirical_lipschitz(segment).overall)
    overall = empirical_lipschitz(tracks).overall
    return SegmentedLipschitz(breakpoints=[float(merged[e]) for e in edges], per_segment=per_segment, overall=overall)
