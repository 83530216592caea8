"""Standalone calculators for the auxiliary coefficient and derivative estimates."""

import math
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np
from numpy.polynomial import Polynomial

from app.core.logging import get_logger
from src.curves.curve import Interval
from src.curves.norms import lip, sup_abs
from src.exceptions import HypothesisFailed

logger = get_logger(__name__)

# relative slack for comparisons of exactly computed quantities
_REL = 1e-12


def interpolation_coeff_bound(n: int, A: float, B: float) -> list[float]:
    """b_j = (2n)^(n+1) A B^(-j) for j = 0..n."""
    if A <= 0 or B <= 0:
        raise ValueError("A and B must be positive")
    if n < 1:
        raise ValueError("n must be >= 1")
    base = float(2 * n) ** (n + 1) * A
    return [base * B ** (-j) for j in range(n + 1)]


@dataclass
class InterpolationCheck:
    A: float
    B: float
    coeffs: list[float]
    bounds: list[float]
    ok: bool


def check_interpolation(poly: Polynomial, B: float) -> InterpolationCheck:
    """Compare |a_j| against the bound with A = max |P| on [0, B]."""
    coeffs = [float(c) for c in poly.coef]
    n = max(len(coeffs) - 1, 1)
    A = sup_abs(poly, (0.0, B))
    if A == 0.0:
        return InterpolationCheck(A=A, B=B, coeffs=coeffs, bounds=[0.0] * (n + 1), ok=True)
    bounds = interpolation_coeff_bound(n, A, B)
    ok = all(abs(c) <= b * (1 + _REL) for c, b in zip(coeffs, bounds))
    return InterpolationCheck(A=A, B=B, coeffs=coeffs, bounds=bounds, ok=ok)


@dataclass
class GlaeserReport:
    lhs: float
    rhs: float
    sharp_rhs: float
    hypotheses_ok: bool
    holds: bool
    violated: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def _signed_range(f: Polynomial, interval: Interval) -> tuple[float, float]:
    lo, hi = interval
    xs = [lo, hi]
    d = f.deriv()
    if d.degree() >= 1 and np.any(d.coef):
        xs += [float(z.real) for z in d.roots() if abs(z.imag) <= 1e-9 * max(1.0, abs(z.real)) and lo <= z.real <= hi]
    values = [float(f(x)) for x in xs]
    return min(values), max(values)


def glaeser_bound(f: Polynomial, t0: float, M: float, I: Interval, strict: bool = True) -> GlaeserReport:
    """Check |f'(t0)| <= (M + Lip(f')/M) |f(t0)|^(1/2) <= 2M |f(t0)|^(1/2).

    Hypotheses: f is single-signed on I, J = {|t - t0| < |f(t0)|^(1/2) / M}
    lies inside I, and M^2 >= Lip_J(f').

    Raises:
        HypothesisFailed: when ``strict`` and a hypothesis does not hold.
    """
    if M <= 0:
        raise ValueError("M must be positive")
    ft0 = float(f(t0))
    root_f = math.sqrt(abs(ft0))
    half_width = root_f / M
    J = (t0 - half_width, t0 + half_width)
    lip_fp = lip(f, J, 1) if half_width > 0 else 0.0
    scale = max(1.0, float(np.max(np.abs(f.coef))))

    violated = None
    f_min, f_max = _signed_range(f, I)
    if f_min < -_REL * scale and f_max > _REL * scale:
        violated = "f changes sign on I"
    elif not (I[0] <= J[0] and J[1] <= I[1]):
        violated = f"J=({J[0]}, {J[1]}) not inside I"
    elif M * M < lip_fp * (1 - _REL):
        violated = f"M^2={M * M} < Lip(f')={lip_fp}"
    if violated and strict:
        logger.warning("glaeser_hypothesis_failed", condition=violated, t0=t0, M=M)
        raise HypothesisFailed(violated)

    lhs = abs(float(f.deriv()(t0)))
    rhs = 2.0 * M * root_f
    sharp = (M + lip_fp / M) * root_f
    holds = lhs <= sharp * (1 + 1e-9) + 1e-12 * scale and sharp <= rhs * (1 + _REL) + 1e-15
    return GlaeserReport(
        lhs=lhs, rhs=rhs, sharp_rhs=sharp, hypotheses_ok=violated is None, holds=holds, violated=violated
    )


def taylor_constant(m: int) -> float:
    """C(m) = m! (2(m-1))^m for m >= 2, and C(1) = 1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return 1.0
    return float(math.factorial(m)) * float(2 * (m - 1)) ** m


@dataclass
class TaylorReport:
    m: int
    constant: float
    bounds: list[float]
    actual: list[float]

    @property
    def holds(self) -> bool:
        return all(a <= b * (1 + _REL) + 1e-15 for a, b in zip(self.actual, self.bounds))


def taylor_derivative_bounds(f: Polynomial, I: Interval, m: int) -> TaylorReport:
    """bound_k = C(m) |I|^(-k) (||f||_inf + Lip(f^(m-1)) |I|^m) for k = 1..m, with actual sup |f^(k)|."""
    width = I[1] - I[0]
    if width <= 0:
        raise ValueError("|I| must be positive")
    C = taylor_constant(m)
    core = sup_abs(f, I) + lip(f, I, m - 1) * width**m
    bounds = [C * width ** (-k) * core for k in range(1, m + 1)]
    actual = [sup_abs(f.deriv(k), I) for k in range(1, m + 1)]
    return TaylorReport(m=m, constant=C, bounds=bounds, actual=actual)


@dataclass
class SpreadCheck:
    spread: float
    middle: float
    ok: bool


def spread_check(roots: Sequence[float]) -> SpreadCheck:
    """n |l_n - l_1| >= sqrt(2) |a~_2|^(1/2) >= |l_n - l_1| / 2 after recentering the roots."""
    values = np.sort(np.asarray(roots, dtype=float))
    n = len(values)
    centered = values - values.mean()
    spread = float(values[-1] - values[0])
    # |a~_2| = sum(l_j^2) / 2 for mean-zero roots
    middle = math.sqrt(2.0) * math.sqrt(float(np.sum(centered**2)) / 2.0)
    slack = 1e-12 * max(1.0, spread)
    ok = n * spread + slack >= middle >= 0.5 * spread - slack
    return SpreadCheck(spread=spread, middle=middle, ok=ok)
