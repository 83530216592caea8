"""Command pipeline: validate a run configuration, dispatch it and write outputs.

guard -> load input -> compute -> sanitize -> write.
"""

import asyncio
import sys
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field

from app.core.config import AppConfig, get_config
from app.core.logging import get_logger
from app.middleware.error_handler import EXIT_OK, CommandErrorHandler
from src.bounds.report import bound_lower_multiplicity
from src.calibration.calibrate import CalibrationResult, calibrate
from src.curves.curve import CoeffCurve
from src.curves.serialization import load_curve
from src.exceptions import LemmaViolated, NotHyperbolic
from src.guardrails.input_guard import InputGuard, InputGuardError
from src.guardrails.output_guard import OutputGuard
from src.poly.monic import MonicPoly, newton_sums, normalize_scale, tschirnhausen, tschirnhausen_bound_check
from src.poly.serialization import load_monic
from src.realroots.roots import ordered_roots
from src.realroots.splitting import split_by_clusters
from src.realroots.sturm import is_hyperbolic
from src.tracking.derivatives import c1_report
from src.tracking.tracks import empirical_lipschitz, sample_grid, track_matched, track_ordered
from src.utils.helpers import dumps_json, format_float, format_table, timer, write_csv, write_json
from src.verify.suite import run_suite, suite_report

logger = get_logger(__name__)

Command = Literal["certify", "roots", "tschirn", "split", "bound", "track", "c1check", "verify", "calibrate"]


class RunConfig(BaseModel):
    """One CLI invocation."""

    command: Command
    input_path: Path | None = None
    output_path: Path | None = None
    grid_n: int = Field(default=2048)
    tol: float = Field(default=1e-10)
    p: int | None = None
    I0: tuple[float, float] | None = None
    I1: tuple[float, float] | None = None
    seed: int = 0
    gap: float | None = None
    mode: Literal["ordered", "matched"] = "ordered"
    t0: list[float] = Field(default_factory=list)
    h0: float | None = None
    trials: int = 10_000
    n: int | None = None
    families: int | None = None


class HyperbolicPipeline:
    """Dispatches a RunConfig to the matching library operation."""

    def __init__(self, config: AppConfig | None = None):
        self.config = config or get_config()
        self.input_guard = InputGuard()
        self.output_guard = OutputGuard()

    def execute(self, run: RunConfig) -> None:
        self.input_guard.check_tol(run.tol)
        self.input_guard.check_grid(run.grid_n)
        if run.I0 is not None and run.I1 is not None:
            self.input_guard.check_intervals(run.I0, run.I1)
        handler = getattr(self, f"_run_{run.command}")
        with timer(f"command_{run.command}"):
            handler(run)

    # output ------------------------------------------------------------

    def _emit_json(self, run: RunConfig, data: dict[str, Any]) -> None:
        clean = self.output_guard.sanitize(data)
        if run.output_path is None:
            sys.stdout.write(dumps_json(clean))
        else:
            write_json(run.output_path, clean)

    # inputs ------------------------------------------------------------

    def _poly(self, run: RunConfig) -> MonicPoly:
        if run.input_path is None:
            raise InputGuardError("--input is required")
        P = load_monic(run.input_path)
        self.input_guard.check_degree(P.degree)
        return P

    def _curve(self, run: RunConfig) -> CoeffCurve:
        if run.input_path is None:
            raise InputGuardError("--input is required")
        curve = load_curve(run.input_path, validation_grid=self.config.curves.validation_grid)
        self.input_guard.check_degree(curve.degree)
        return curve

    def _intervals(self, run: RunConfig) -> tuple[tuple[float, float], tuple[float, float]]:
        if run.I0 is None or run.I1 is None:
            raise InputGuardError("--I0 and --I1 are required")
        return run.I0, run.I1

    # commands ----------------------------------------------------------

    def _run_certify(self, run: RunConfig) -> None:
        P = self._poly(run)
        cert = is_hyperbolic(P, tol=run.tol, gcd_rtol=self.config.numerics.gcd_rtol)
        self._emit_json(
            run,
            {
                "is_hyperbolic": cert.is_hyperbolic,
                "real_root_count": cert.real_root_count,
                "cauchy_radius": cert.cauchy_radius,
            },
        )
        if not cert.is_hyperbolic:
            raise NotHyperbolic(f"{cert.real_root_count} of {P.degree} roots real")

    def _run_roots(self, run: RunConfig) -> None:
        roots = ordered_roots(self._poly(run), tol=run.tol, gcd_rtol=self.config.numerics.gcd_rtol)
        self._emit_json(run, {"roots": list(roots.values), "residual": roots.residual})

    def _run_tschirn(self, run: RunConfig) -> None:
        P = self._poly(run)
        T = tschirnhausen(P)
        coeff_ratio, sum_ratio = tschirnhausen_bound_check(T)
        normalized = normalize_scale(T).coeffs if T.a2 != 0.0 else None
        self._emit_json(
            run,
            {
                "shift": T.shift,
                "reduced": list(T.reduced.coeffs),
                "newton_sums": newton_sums(P, P.degree),
                "normalized": list(normalized) if normalized is not None else None,
                "coeff_ratio": coeff_ratio,
                "sum_ratio": sum_ratio,
            },
        )

    def _run_split(self, run: RunConfig) -> None:
        result = split_by_clusters(
            self._poly(run), gap=run.gap, tol=run.tol, max_iter=self.config.numerics.split_max_iter
        )
        self._emit_json(run, result.to_dict() | {"newton_iters": result.newton_iters})

    def _run_bound(self, run: RunConfig) -> None:
        curve = self._curve(run)
        I0, I1 = self._intervals(run)
        p = run.p or curve.degree
        self.input_guard.check_p(p, curve.degree)
        report = bound_lower_multiplicity(curve, I0, I1, p, alpha_grid=run.grid_n, tol=run.tol)
        sys.stdout.write(format_table(report.table()))
        if run.output_path is not None:
            write_json(run.output_path, self.output_guard.sanitize(report.to_dict()))

    def _run_track(self, run: RunConfig) -> None:
        curve = self._curve(run)
        interval = run.I0 or curve.domain
        grid = sample_grid(interval, run.grid_n)
        tracker = track_matched if run.mode == "matched" else track_ordered
        tracks = tracker(curve, grid, tol=run.tol)
        lipschitz = empirical_lipschitz(tracks)
        logger.info("tracks_computed", mode=run.mode, nodes=len(grid), lipschitz=lipschitz.overall)
        if run.output_path is None:
            sys.stdout.write(",".join(tracks.header()) + "\n")
            for row in tracks.to_rows():
                sys.stdout.write(",".join(format_float(v) for v in row) + "\n")
        else:
            write_csv(run.output_path, tracks.header(), tracks.to_rows())

    def _run_c1check(self, run: RunConfig) -> None:
        curve = self._curve(run)
        tracking = self.config.tracking
        interval = run.I0 or curve.domain
        nodes = sample_grid(interval, 63)
        report = c1_report(
            curve,
            nodes,
            run.t0,
            h0=run.h0 or tracking.h0,
            tol=tracking.richardson_tol,
            levels=tracking.halvings,
        )
        self._emit_json(run, report.to_dict())

    def _run_verify(self, run: RunConfig) -> None:
        results = run_suite(seed=run.seed, trials=run.trials)
        report = suite_report(results)
        self._emit_json(run, report)
        if report["violations"]:
            raise LemmaViolated(f"{report['violations']} violations")

    def _run_calibrate(self, run: RunConfig) -> None:
        cal = self.config.calibration
        if run.n is None:
            raise InputGuardError("--n is required")
        self.input_guard.check_degree(run.n)
        p = run.p or run.n
        self.input_guard.check_p(p, run.n)
        I0, I1 = run.I0 or cal.I0, run.I1 or cal.I1
        self.input_guard.check_intervals(I0, I1)
        result = asyncio.run(
            calibrate(
                run.n,
                p,
                run.families or cal.families,
                run.seed,
                I0=I0,
                I1=I1,
                grid=run.grid_n,
                alpha_grid=self.config.bounds.alpha_grid,
                root_degree=cal.root_degree,
                coeff_range=cal.coeff_range,
                stability_threshold=cal.stability_threshold,
                assumption_samples=self.config.bounds.assumption_samples,
            )
        )
        self._write_calibration(run, result)

    def _write_calibration(self, run: RunConfig, result: CalibrationResult) -> None:
        summary = self.output_guard.sanitize(result.to_dict())
        if run.output_path is None:
            sys.stdout.write(dumps_json(summary))
            return
        base = run.output_path.with_suffix("")
        write_csv(base.with_suffix(".csv"), result.table_header(), result.table_rows())
        write_json(base.with_suffix(".json"), summary)


def run(config: RunConfig) -> int:
    """Execute one command; returns the process exit status (0, 1 or 2)."""
    try:
        HyperbolicPipeline().execute(config)
    except Exception as exc:
        return CommandErrorHandler().handle(exc, config.command)
    return EXIT_OK
