"""Sampled verification of the local scale assumption around a point t0."""

import math
from dataclasses import asdict, dataclass

import numpy as np

from src.curves.curve import CoeffCurve, Interval
from src.exceptions import OutOfDomain, ZeroA2


@dataclass
class AssumptionCheck:
    """Outcome of checking the assumption on I_t0(1/A) = {|t - t0| < |a~_2(t0)|^(1/2) / A}.

    ``c_hat`` is the smallest constant with |a~_i^(k)| <= c_hat A^k |a~_2|^((i-k)/2)
    at every sample, over all (i, k) except (2, 0), whose ratio is identically 1.
    ``worst_deriv_margin`` is ``c_cap - c_hat`` (inf without a cap).
    """

    t0: float
    radius: float
    a1_ok: bool
    a2_ratio_ok: bool
    deriv_ok: bool
    worst_ratio: float
    worst_deriv_margin: float
    c_hat: float

    @property
    def passed(self) -> bool:
        return self.a1_ok and self.a2_ratio_ok and self.deriv_ok

    def to_dict(self) -> dict:
        return asdict(self)


def _ratio_badness(r: float) -> float:
    return math.inf if r <= 0.0 else abs(math.log(r))


def check_assumption(
    curve: CoeffCurve,
    I0: Interval,
    I1: Interval,
    A: float,
    t0: float,
    samples: int = 256,
    c_cap: float | None = None,
) -> AssumptionCheck:
    """Check interval containment, the a~_2 ratio window [1/2, 2] and the derivative bounds at t0.

    Raises:
        ZeroA2: when a~_2(t0) = 0.
    """
    if not I0[0] <= t0 <= I0[1]:
        raise OutOfDomain(f"t0={t0!r} not in I0={tuple(I0)}")
    if A <= 0:
        raise ValueError("A must be positive")
    n = curve.degree
    a2 = curve.a2
    a2_t0 = float(a2(t0))
    if a2_t0 == 0.0:
        raise ZeroA2(f"t0={t0!r}")
    radius = math.sqrt(abs(a2_t0)) / A
    a1_ok = I1[0] <= t0 - radius and t0 + radius <= I1[1]

    ts = np.linspace(max(t0 - radius, I1[0]), min(t0 + radius, I1[1]), samples)
    a2_vals = a2(ts)
    ratios = a2_vals / a2_t0
    a2_ratio_ok = bool(np.all((ratios >= 0.5) & (ratios <= 2.0)))
    worst_ratio = float(max(ratios, key=_ratio_badness))

    c_hat = 0.0
    abs_a2 = np.abs(a2_vals)
    with np.errstate(divide="ignore", invalid="ignore"):
        for i in range(2, n + 1):
            a_i = curve.tschirn[i - 1]
            for k in range(1 if i == 2 else 0, n + 1):
                num = np.abs(a_i.deriv(k)(ts))
                den = A**k * abs_a2 ** ((i - k) / 2)
                q = np.where(num == 0.0, 0.0, num / den)
                q = np.where(np.isnan(q), math.inf, q)
                c_hat = max(c_hat, float(np.max(q)))
    deriv_ok = math.isfinite(c_hat) and (c_cap is None or c_hat <= c_cap)
    margin = math.inf if c_cap is None else c_cap - c_hat
    return AssumptionCheck(
        t0=float(t0),
        radius=radius,
        a1_ok=a1_ok,
        a2_ratio_ok=a2_ratio_ok,
        deriv_ok=deriv_ok,
        worst_ratio=worst_ratio,
        worst_deriv_margin=margin,
        c_hat=c_hat,
    )
