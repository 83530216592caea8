"""Empirical calibration of root Lipschitz constants against the bound bracket.

Families are evaluated concurrently in worker threads and reduced strictly by
family index, so a fixed seed gives identical tables regardless of scheduling.
"""

import asyncio
import math
import statistics
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np

from app.core.logging import get_logger
from src.bounds.assumption import check_assumption
from src.bounds.report import bound_lower_multiplicity
from src.curves.curve import GroundTruthFamily, Interval
from src.curves.generator import random_family
from src.exceptions import DegenerateM2, ZeroA2
from src.tracking.tracks import empirical_lipschitz, sample_grid, track_ordered

logger = get_logger(__name__)


@dataclass
class FamilyResult:
    """Single family calibration record."""

    index: int
    empirical: float
    bracket: float
    ratio: float | None
    A0: float
    c_hat: float
    assumption_ok: bool
    skipped: str | None = None


def ratio_of(empirical: float, bracket: float) -> float:
    if bracket > 0:
        return empirical / bracket
    return 0.0 if empirical == 0 else math.inf


def evaluate_family(
    family: GroundTruthFamily,
    I0: Interval,
    I1: Interval,
    p: int | None = None,
    grid: int = 2048,
    alpha_grid: int = 2048,
    assumption_points: int = 16,
    index: int = 0,
    assumption_samples: int = 256,
) -> FamilyResult:
    """Empirical Lipschitz constant of the ordered roots on I0 divided by the bracket on (I0, I1).

    With p = n the assumption is also checked at ``assumption_points`` points of I0
    using A = A0; ``c_hat`` is the largest fitted derivative constant.
    """
    curve = family.curve
    n = curve.degree
    p = p or n
    try:
        report = bound_lower_multiplicity(curve, I0, I1, p, alpha_grid=alpha_grid)
    except DegenerateM2 as exc:
        logger.info("calibration_family_skipped", index=index, reason=str(exc))
        return FamilyResult(index, 0.0, 0.0, None, 0.0, 0.0, True, skipped=exc.condition)
    tracks = track_ordered(curve, sample_grid(I0, grid), certify=False)
    empirical = empirical_lipschitz(tracks).overall

    c_hat, assumption_ok = 0.0, True
    if p == n and report.A0 > 0 and assumption_points > 0:
        for t0 in sample_grid(I0, assumption_points):
            try:
                check = check_assumption(curve, I0, I1, report.A0, float(t0), samples=assumption_samples)
            except ZeroA2:
                continue
            assumption_ok = assumption_ok and check.a1_ok and check.a2_ratio_ok
            c_hat = max(c_hat, check.c_hat)
    return FamilyResult(
        index=index,
        empirical=empirical,
        bracket=report.bracket,
        ratio=ratio_of(empirical, report.bracket),
        A0=report.A0,
        c_hat=c_hat,
        assumption_ok=assumption_ok,
    )


class RatioTracker:
    """Collects family results and summarizes the ratio distribution."""

    def __init__(self, stability_threshold: float = 0.1):
        self._records: list[FamilyResult] = []
        self.stability_threshold = stability_threshold

    def record(self, result: FamilyResult) -> None:
        self._records.append(result)

    @property
    def records(self) -> list[FamilyResult]:
        return sorted(self._records, key=lambda r: r.index)

    def _running(self, values: list[float]) -> dict[str, Any]:
        half = values[: max(1, len(values) // 2)]
        full_max, half_max = max(values), max(half)
        growth = 0.0 if half_max == full_max else (math.inf if half_max == 0 else (full_max - half_max) / half_max)
        return {"half_max": half_max, "max": full_max, "growth": growth, "stable": growth < self.stability_threshold}

    def get_summary(self) -> dict[str, Any]:
        """Aggregate ratio statistics over families in index order."""
        ratios = [r.ratio for r in self.records if r.ratio is not None]
        if not ratios:
            return {"families": len(self._records), "evaluated": 0, "min": None, "median": None, "max": None}
        c_hats = [r.c_hat for r in self.records if r.ratio is not None]
        running = self._running(ratios)
        return {
            "families": len(self._records),
            "evaluated": len(ratios),
            "min": min(ratios),
            "median": statistics.median(ratios),
            "max": max(ratios),
            "half_sample_max": running["half_max"],
            "growth": running["growth"],
            "stable": running["stable"],
            "c_hat_max": max(c_hats),
            "c_hat_stable": self._running(c_hats)["stable"],
            "assumption_ok": all(r.assumption_ok for r in self.records),
        }


@dataclass
class CalibrationResult:
    n: int
    p: int
    seed: int
    results: list[FamilyResult]
    summary: dict[str, Any]

    def table_rows(self) -> list[list[Any]]:
        return [
            [r.index, r.empirical, r.bracket, r.ratio if r.ratio is not None else "", r.A0, r.c_hat]
            for r in self.results
        ]

    @staticmethod
    def table_header() -> list[str]:
        return ["family", "empirical", "bracket", "ratio", "A0", "c_hat"]

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "p": self.p, "seed": self.seed, "summary": self.summary}

    def rows_as_dicts(self) -> list[dict[str, Any]]:
        return [asdict(r) for r in self.results]


async def calibrate(
    n: int,
    p: int | None = None,
    num_families: int = 100,
    seed: int = 0,
    I0: Interval = (-1.0, 1.0),
    I1: Interval = (-2.0, 2.0),
    grid: int = 2048,
    alpha_grid: int = 2048,
    root_degree: int = 4,
    coeff_range: float = 2.0,
    stability_threshold: float = 0.1,
    assumption_points: int = 16,
    assumption_samples: int = 256,
) -> CalibrationResult:
    """Generate seeded families and compute their empirical / bracket ratios.

    Family i uses the generator ``np.random.default_rng([seed, i])`` so each
    family is reproducible on its own.
    """
    p = p or n

    def job(i: int) -> FamilyResult:
        rng = np.random.default_rng([seed, i])
        family = random_family(n, rng, root_degree=root_degree, coeff_range=coeff_range, domain=I1)
        result = evaluate_family(
            family, I0, I1, p, grid, alpha_grid, assumption_points, index=i, assumption_samples=assumption_samples
        )
        logger.debug("calibration_family_done", index=i, ratio=result.ratio)
        return result

    results = await asyncio.gather(*(asyncio.to_thread(job, i) for i in range(num_families)))
    tracker = RatioTracker(stability_threshold)
    for result in results:
        tracker.record(result)
    summary = tracker.get_summary()
    logger.info("calibration_done", n=n, p=p, families=num_families, max_ratio=summary.get("max"))
    return CalibrationResult(n=n, p=p, seed=seed, results=tracker.records, summary=summary)
