"""Explicit Lipschitz-bound quantities for root branches of a hyperbolic curve.

All quantities are computed from the shifted coefficients a~_i(t) on I1, using
exact sup-norms of polynomial derivatives. The universal constants in front
of the bounds are not part of the reported ``bracket``.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from app.core.logging import get_logger
from src.curves.curve import CoeffCurve, Interval, eval_curve
from src.curves.norms import cnorm, inf_abs, lip, sup_abs
from src.exceptions import BadIntervals, DegenerateM2
from src.realroots.roots import ordered_roots
from src.tracking.tracks import sample_grid

logger = get_logger(__name__)


@dataclass
class BoundReport:
    n: int
    p: int
    I0: Interval
    I1: Interval
    delta: float
    sup_a2: float
    lip_a2p: float
    M: list[float]
    m2: float
    A1: float
    A2: float
    A0: float
    alpha_I: float | None
    bracket: float
    a2_argmax: int | None = None
    normalized_norm: float = 0.0
    coarse_norm: float = 0.0
    raw_norm: float = 0.0
    lower_coarse: float | None = None
    alpha_unbounded: bool = False

    def to_dict(self) -> dict:
        return asdict(self)

    def table(self) -> list[tuple[str, float | None]]:
        """(quantity, value) rows in a fixed order."""
        return [
            ("n", self.n),
            ("p", self.p),
            ("delta", self.delta),
            ("sup_a2", self.sup_a2),
            ("lip_a2p", self.lip_a2p),
            ("m2", self.m2),
            ("A1", self.A1),
            ("A2", self.A2),
            ("A0", self.A0),
            ("alpha_I", self.alpha_I),
            ("bracket", self.bracket),
            ("normalized_norm", self.normalized_norm),
            ("coarse_norm", self.coarse_norm),
            ("raw_norm", self.raw_norm),
        ]


@dataclass
class AlphaReport:
    alpha: float
    unbounded: bool
    argmax_t: float | None = None
    values: list[float] = field(default_factory=list, repr=False)


def endpoint_distance(curve: CoeffCurve, I0: Interval, I1: Interval) -> float:
    """delta = min of the two one-sided gaps between I0 and I1.

    Raises:
        BadIntervals: unless I0 is strictly inside I1 and I1 lies in the domain.
    """
    (a0, b0), (a1, b1) = I0, I1
    if not (a0 < b0 and a1 < b1):
        raise BadIntervals(f"empty interval in I0={I0}, I1={I1}")
    delta = min(a0 - a1, b1 - b0)
    if delta <= 0:
        raise BadIntervals(f"I0={I0} not strictly inside I1={I1}")
    if not (curve.contains(a1) and curve.contains(b1)):
        raise BadIntervals(f"I1={I1} leaves the domain {curve.domain}")
    return delta


def _a1(curve: CoeffCurve, I1: Interval, delta: float) -> tuple[float, float, float]:
    sup_a2 = sup_abs(curve.a2, I1)
    lip_a2p = lip(curve.a2, I1, 1)
    return max(math.sqrt(sup_a2) / delta, math.sqrt(lip_a2p)), sup_a2, lip_a2p


def _m_values(curve: CoeffCurve, I1: Interval, p: int) -> list[float]:
    """M_i = Lip_I1(a~_i^(p-1)) for i = 1..n (M_1 = 0)."""
    return [lip(a, I1, p - 1) for a in curve.tschirn]


def _argmax(terms: Sequence[tuple[int, float]]) -> tuple[int | None, float]:
    best_i, best = None, 0.0
    for i, value in terms:
        if value > best:
            best_i, best = i, value
    return best_i, best


def bronshtein_A(curve: CoeffCurve, I0: Interval, I1: Interval) -> tuple[float, float, float]:
    """(A1, A2, A0) with A0 = 6 max(A1, A2)."""
    report = bronshtein_bound(curve, I0, I1)
    return report.A1, report.A2, report.A0


def _tschirn_norms(curve: CoeffCurve, I1: Interval, p: int) -> tuple[float, float, float]:
    n = curve.degree
    norms = [cnorm(a, I1, p) for a in curve.tschirn]
    normalized = max((norms[i - 1] ** (1.0 / i) for i in range(2, n + 1)), default=0.0)
    coarse = 1.0 + max(norms, default=0.0)
    raw = max(cnorm(a, I1, p) ** (1.0 / i) for i, a in enumerate(curve.coeff_polys, start=1))
    return normalized, coarse, raw


def bronshtein_bound(curve: CoeffCurve, I0: Interval, I1: Interval) -> BoundReport:
    """Bound bracket for the case where roots may collide with full multiplicity (p = n).

    Args:
        curve: Coefficient curve whose domain contains I1.
        I0: Interval on which the root Lipschitz constant is bounded.
        I1: Enlarged interval on which the norms are taken.

    Returns:
        BoundReport with bracket = max(A1, A2).
    """
    n = curve.degree
    delta = endpoint_distance(curve, I0, I1)
    A1, sup_a2, lip_a2p = _a1(curve, I1, delta)
    M = _m_values(curve, I1, n)
    a2_argmax, A2 = _argmax(
        [(i, (M[i - 1] * sup_a2 ** ((n - i) / 2)) ** (1.0 / n)) for i in range(2, n + 1)]
    )
    normalized, coarse, raw = _tschirn_norms(curve, I1, n)
    report = BoundReport(
        n=n,
        p=n,
        I0=tuple(I0),
        I1=tuple(I1),
        delta=delta,
        sup_a2=sup_a2,
        lip_a2p=lip_a2p,
        M=M,
        m2=inf_abs(curve.a2, I0),
        A1=A1,
        A2=A2,
        A0=6.0 * max(A1, A2),
        alpha_I=None,
        bracket=max(A1, A2),
        a2_argmax=a2_argmax,
        normalized_norm=normalized,
        coarse_norm=coarse,
        raw_norm=raw,
    )
    logger.debug("bound_computed", n=n, p=n, A1=A1, A2=A2, bracket=report.bracket)
    return report


def alpha_from_roots(roots: Sequence[float], p: int) -> float:
    """|l_n - l_1| / min_i |l_(i+p) - l_i| for sorted roots; inf on a vanishing denominator."""
    values = sorted(roots)
    n = len(values)
    if not 2 <= p < n:
        raise ValueError(f"p must satisfy 2 <= p < n, got p={p}, n={n}")
    denominator = min(values[i + p] - values[i] for i in range(n - p))
    if denominator <= 0.0:
        return math.inf
    return (values[-1] - values[0]) / denominator


def alpha_uniformity(curve: CoeffCurve, grid: Sequence[float], p: int, tol: float = 1e-10) -> AlphaReport:
    """Grid estimate of sup_t alpha(t), a lower estimate of the true supremum."""
    values = [alpha_from_roots(ordered_roots(eval_curve(curve, float(t)), tol=tol).values, p) for t in grid]
    k = int(np.argmax(values))
    alpha = values[k]
    return AlphaReport(alpha=alpha, unbounded=math.isinf(alpha), argmax_t=float(grid[k]), values=values)


def bound_lower_multiplicity(
    curve: CoeffCurve,
    I0: Interval,
    I1: Interval,
    p: int,
    alpha_grid: int = 2048,
    tol: float = 1e-10,
) -> BoundReport:
    """Bound bracket when at most p roots collide, scaled by the alpha-uniformity of I1.

    Raises:
        DegenerateM2: if a~_2 vanishes somewhere on I0.
    """
    n = curve.degree
    if p == n:
        return bronshtein_bound(curve, I0, I1)
    if not 2 <= p < n:
        raise ValueError(f"p must satisfy 2 <= p < n, or p = n for full multiplicity; got p={p}, n={n}")
    delta = endpoint_distance(curve, I0, I1)
    m2 = inf_abs(curve.a2, I0)
    if m2 == 0.0:
        raise DegenerateM2(f"a2 vanishes on I0={tuple(I0)}")
    A1, sup_a2, lip_a2p = _a1(curve, I1, delta)
    M = _m_values(curve, I1, p)
    terms = []
    for i in range(2, n + 1):
        base = sup_a2 if i <= p else m2
        terms.append((i, (M[i - 1] * base ** ((p - i) / 2)) ** (1.0 / p)))
    a2_argmax, A2 = _argmax(terms)
    alpha = alpha_uniformity(curve, sample_grid(I1, alpha_grid), p, tol=tol)
    factor = alpha.alpha ** ((n - p) / p)
    normalized, coarse, raw = _tschirn_norms(curve, I1, p)
    report = BoundReport(
        n=n,
        p=p,
        I0=tuple(I0),
        I1=tuple(I1),
        delta=delta,
        sup_a2=sup_a2,
        lip_a2p=lip_a2p,
        M=M,
        m2=m2,
        A1=A1,
        A2=A2,
        A0=6.0 * max(A1, A2),
        alpha_I=alpha.alpha,
        bracket=factor * max(A1, A2),
        a2_argmax=a2_argmax,
        normalized_norm=normalized,
        coarse_norm=coarse,
        raw_norm=raw,
        lower_coarse=factor * (1.0 + m2 ** ((p - n) / (2 * p))) * coarse,
        alpha_unbounded=alpha.unbounded,
    )
    logger.debug("bound_computed", n=n, p=p, A1=A1, A2=A2, alpha=alpha.alpha, bracket=report.bracket)
    return report


def flat_case_scan(curve: CoeffCurve, t0: float, deltas: Sequence[float]) -> list[tuple[float, float]]:
    """(delta, A0) on I0 = (t0 - delta, t0 + delta), I1 = (t0 - 2 delta, t0 + 2 delta)."""
    scan = []
    for d in deltas:
        report = bronshtein_bound(curve, (t0 - d, t0 + d), (t0 - 2 * d, t0 + 2 * d))
        scan.append((float(d), report.A0))
    return scan
