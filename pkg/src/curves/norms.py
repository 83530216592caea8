"""Exact sup-norms and C^(p-1,1) norms of polynomial coefficient functions.

Extrema of |f| on a closed interval occur at the endpoints or at real critical
points, so every sup below is a finite maximum over those candidates.
Lip(f^(p-1)) is sup |f^(p)|, which is exact for polynomials.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from src.curves.curve import CoeffCurve, Interval
from src.exceptions import OutOfDomain

_IMAG_TOL = 1e-6


def real_zeros(f: Polynomial, interval: Interval) -> list[float]:
    """Real roots of f inside the interval (near-real numeric roots included)."""
    if f.degree() < 1 or not np.any(f.coef):
        return []
    lo, hi = interval
    points = []
    for z in f.roots():
        x = float(np.real(z))
        if abs(np.imag(z)) <= _IMAG_TOL * max(1.0, abs(x)) and lo <= x <= hi:
            points.append(x)
    return points


def _candidates(f: Polynomial, interval: Interval) -> list[float]:
    return [float(interval[0]), float(interval[1])] + real_zeros(f.deriv(), interval)


def sup_abs(f: Polynomial, interval: Interval) -> float:
    """max |f| on the closed interval."""
    return max(abs(float(f(x))) for x in _candidates(f, interval))


def inf_abs(f: Polynomial, interval: Interval, zero_tol: float = 1e-12) -> float:
    """min |f| on the closed interval; exactly 0 when f has a real zero there."""
    scale = max(1.0, float(np.max(np.abs(f.coef))))
    for x in real_zeros(f, interval):
        if abs(float(f(x))) <= zero_tol * scale:
            return 0.0
    return min(abs(float(f(x))) for x in _candidates(f, interval) + real_zeros(f, interval))


def lip(f: Polynomial, interval: Interval, k: int = 0) -> float:
    """Lipschitz constant of f^(k) on the interval."""
    return sup_abs(f.deriv(k + 1), interval)


def cnorm(f: Polynomial, interval: Interval, p: int) -> float:
    """||f||_{C^(p-1)} + Lip(f^(p-1)), with the C^(p-1) part a max over orders."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return max(sup_abs(f.deriv(k), interval) for k in range(p)) + lip(f, interval, p - 1)


@dataclass
class CurveNorms:
    """Derivative norms of the coefficients a_j and the M_i of the shifted coefficients.

    ``sup_norms[j][k]`` is sup |a_(j+1)^(k)| for k <= p - 1; ``lip[j]`` is
    Lip(a_(j+1)^(p-1)); ``M[i]`` is Lip(a~_(i+1)^(p-1)), so M[0] = 0.
    """

    p: int
    sup_norms: list[list[float]]
    lip: list[float]
    M: list[float]


def curve_derivative_norms(curve: CoeffCurve, interval: Interval, p: int) -> CurveNorms:
    lo, hi = interval
    if not (curve.contains(lo) and curve.contains(hi)):
        raise OutOfDomain(f"[{lo}, {hi}] not inside [{curve.domain[0]}, {curve.domain[1]}]")
    sup_norms = [[sup_abs(a.deriv(k), interval) for k in range(p)] for a in curve.coeff_polys]
    return CurveNorms(
        p=p,
        sup_norms=sup_norms,
        lip=[lip(a, interval, p - 1) for a in curve.coeff_polys],
        M=[lip(a, interval, p - 1) for a in curve.tschirn],
    )
