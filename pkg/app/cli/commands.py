"""Command definitions for the hyproots CLI.

Each command only translates flags into a RunConfig; the pipeline does the work.
"""

from pathlib import Path

import click

from app.core.config import get_config
from app.core.logging import get_logger
from src.pipeline.runner import RunConfig, run
from src.utils.helpers import parse_interval

logger = get_logger(__name__)


class IntervalType(click.ParamType):
    """``a,b`` with a < b."""

    name = "interval"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return parse_interval(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


INTERVAL = IntervalType()


def input_option(f):
    return click.option("--input", "input_path", type=click.Path(path_type=Path), required=True)(f)


def output_option(f):
    return click.option("--output", "output_path", type=click.Path(path_type=Path), default=None)(f)


def tol_option(f):
    return click.option("--tol", type=float, default=lambda: get_config().numerics.tol, show_default="1e-10")(f)


def grid_option(f):
    return click.option("--grid", "grid_n", type=int, default=lambda: get_config().tracking.grid, show_default="2048")(f)


def interval_options(f):
    f = click.option("--I1", "I1", type=INTERVAL, default=None, help="Enclosing interval a,b.")(f)
    return click.option("--I0", "I0", type=INTERVAL, default=None, help="Inner interval a,b.")(f)


def _finish(ctx: click.Context, config: RunConfig) -> None:
    ctx.exit(run(config))


@click.command()
@input_option
@output_option
@tol_option
@click.pass_context
def certify(ctx, input_path, output_path, tol):
    """Certify that every root of a polynomial is real."""
    _finish(ctx, RunConfig(command="certify", input_path=input_path, output_path=output_path, tol=tol))


@click.command()
@input_option
@output_option
@tol_option
@click.pass_context
def roots(ctx, input_path, output_path, tol):
    """Ordered real roots with their residual."""
    _finish(ctx, RunConfig(command="roots", input_path=input_path, output_path=output_path, tol=tol))


@click.command()
@input_option
@output_option
@click.pass_context
def tschirn(ctx, input_path, output_path):
    """Tschirnhausen form, Newton sums and the normalized polynomial."""
    _finish(ctx, RunConfig(command="tschirn", input_path=input_path, output_path=output_path))


@click.command()
@input_option
@output_option
@tol_option
@click.option("--gap", type=float, default=None, help="Cluster gap; default (max - min) / 4n.")
@click.pass_context
def split(ctx, input_path, output_path, tol, gap):
    """Split off the lowest root cluster: P = P_b * P_c."""
    _finish(ctx, RunConfig(command="split", input_path=input_path, output_path=output_path, tol=tol, gap=gap))


@click.command()
@input_option
@output_option
@interval_options
@grid_option
@tol_option
@click.option("--p", type=int, default=None, help="Maximal root multiplicity (default n).")
@click.pass_context
def bound(ctx, input_path, output_path, I0, I1, grid_n, tol, p):
    """Lipschitz bound bracket of a curve on I0 with norms on I1."""
    _finish(
        ctx,
        RunConfig(
            command="bound", input_path=input_path, output_path=output_path, I0=I0, I1=I1, grid_n=grid_n, tol=tol, p=p
        ),
    )


@click.command()
@input_option
@output_option
@interval_options
@grid_option
@tol_option
@click.option("--mode", type=click.Choice(["ordered", "matched"]), default="ordered", show_default=True)
@click.pass_context
def track(ctx, input_path, output_path, I0, I1, grid_n, tol, mode):
    """Root tracks on I0 (or the curve domain) as CSV."""
    _finish(
        ctx,
        RunConfig(
            command="track",
            input_path=input_path,
            output_path=output_path,
            I0=I0,
            I1=I1,
            grid_n=grid_n,
            tol=tol,
            mode=mode,
        ),
    )


@click.command()
@input_option
@output_option
@interval_options
@click.option("--t0", "t0", type=float, multiple=True, required=True, help="Point to check; repeatable.")
@click.option("--h0", type=float, default=None, help="Initial one-sided step.")
@click.pass_context
def c1check(ctx, input_path, output_path, I0, I1, t0, h0):
    """One-sided derivatives of the ordered roots and their one-sided continuity."""
    _finish(
        ctx,
        RunConfig(
            command="c1check", input_path=input_path, output_path=output_path, I0=I0, I1=I1, t0=list(t0), h0=h0
        ),
    )


@click.command()
@output_option
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--trials", type=int, default=10_000, show_default=True)
@click.pass_context
def verify(ctx, output_path, seed, trials):
    """Randomized checks of the coefficient, splitting and calculus inequalities."""
    _finish(ctx, RunConfig(command="verify", output_path=output_path, seed=seed, trials=trials))


@click.command()
@output_option
@interval_options
@grid_option
@click.option("--n", type=int, required=True, help="Degree of the random families.")
@click.option("--p", type=int, default=None)
@click.option("--families", type=int, default=None, help="Number of families (config default 100).")
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def calibrate(ctx, output_path, I0, I1, grid_n, n, p, families, seed):
    """Empirical Lipschitz / bracket ratios over seeded random families."""
    _finish(
        ctx,
        RunConfig(
            command="calibrate",
            output_path=output_path,
            I0=I0,
            I1=I1,
            grid_n=grid_n,
            n=n,
            p=p,
            families=families,
            seed=seed,
        ),
    )


COMMANDS = [certify, roots, tschirn, split, bound, track, c1check, verify, calibrate]
