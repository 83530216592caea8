"""Root isolation on the recentered, rescaled form of a monic polynomial.

Roots clustered far from the origin lose their separation to cancellation
when P is evaluated through its raw coefficients. Isolation therefore runs on

    Q(y) = rho^(-n) P(rho * y - shift),

where ``shift = a_1 / n`` is applied in exact rational arithmetic and
``rho = max_j |c_j|^(1/j)`` over the shifted coefficients, so every scaled
coefficient has modulus at most 1 and every root of Q lies in [-2, 2].
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import brentq

from src.poly.monic import MonicPoly, horner

# values below ROUNDOFF * n * sum |c_k| |x|^k are indistinguishable from zero
ROUNDOFF = 16.0 * float(np.finfo(float).eps)


@dataclass(frozen=True)
class ScaledForm:
    """Q(y) = rho^(-n) P(rho * y - shift); ``coeffs`` is descending with leading 1."""

    shift: float
    rho: float
    coeffs: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def radius(self) -> float:
        return 1.0 + max((abs(c) for c in self.coeffs[1:]), default=0.0)

    def to_original(self, y: float) -> float:
        return self.rho * y - self.shift


def taylor_shift(full: Sequence[float], s: float) -> list[float]:
    """Coefficients of p(y + s), computed exactly and rounded once."""
    c = [Fraction(x) for x in full]
    step = Fraction(s)
    n = len(c) - 1
    for i in range(n):
        for j in range(1, n - i + 1):
            c[j] += step * c[j - 1]
    return [float(x) for x in c]


def scaled_form(P: MonicPoly) -> ScaledForm:
    n = P.degree
    shift = P.coeffs[0] / n
    shifted = taylor_shift(P.full(), -shift)
    rho = max((abs(shifted[j]) ** (1.0 / j) for j in range(1, n + 1)), default=0.0)
    if rho == 0.0 or not np.isfinite(rho):
        return ScaledForm(shift=shift, rho=0.0, coeffs=tuple(shifted))
    scaled = [1.0] + [c / rho**j for j, c in enumerate(shifted[1:], start=1)]
    return ScaledForm(shift=shift, rho=rho, coeffs=tuple(scaled))


def monic_derivative(full: Sequence[float]) -> list[float]:
    n = len(full) - 1
    return [full[j] * (n - j) / n for j in range(n)]


def noise_floor(full: Sequence[float], x: float) -> float:
    """Evaluation uncertainty of a descending coefficient sequence at x."""
    n = len(full) - 1
    return ROUNDOFF * max(n, 1) * horner([abs(c) for c in full], abs(x))


def _bisect(f: Callable[[float], float], a: float, b: float, fa: float, xtol: float) -> float:
    for _ in range(200):
        m = 0.5 * (a + b)
        if b - a <= xtol or m in (a, b):
            return m
        fm = f(m)
        if fm == 0.0:
            return m
        if (fm < 0.0) == (fa < 0.0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def _polish(f: Callable[[float], float], df: Callable[[float], float], x: float, a: float, b: float) -> float:
    """One guarded Newton step; kept only if it stays in [a, b] and lowers |f|."""
    fx, dfx = f(x), df(x)
    if fx == 0.0 or dfx == 0.0:
        return x
    y = x - fx / dfx
    if a <= y <= b and abs(f(y)) <= abs(fx):
        return y
    return x


def root_in(full: Sequence[float], a: float, b: float, xtol: float) -> float:
    """The root of ``full`` in [a, b], where [a, b] holds exactly one root."""
    if a >= b:
        return a
    n = len(full) - 1
    derivative = monic_derivative(full)

    def f(x: float) -> float:
        return horner(full, x)

    def df(x: float) -> float:
        return n * horner(derivative, x)

    fa, fb = f(a), f(b)
    # a multiple root sits (numerically) on a critical endpoint
    if abs(fa) <= noise_floor(full, a):
        return a
    if abs(fb) <= noise_floor(full, b):
        return b
    if (fa < 0.0) == (fb < 0.0):
        return a if abs(fa) <= abs(fb) else b
    root, info = brentq(f, a, b, xtol=xtol, full_output=True, disp=False)
    if not info.converged:
        root = _bisect(f, a, b, fa, xtol)
    return _polish(f, df, root, a, b)


def interlaced_roots(full: Sequence[float], lo: float, hi: float, xtol: float) -> list[float]:
    """Roots of a real-rooted monic polynomial, isolated by its critical points.

    The roots of P' interlace those of P, so each gap between consecutive
    critical points (padded by [lo, hi]) holds exactly one root.
    """
    return isolate(full, lo, hi, xtol)[1]


def isolate(full: Sequence[float], lo: float, hi: float, xtol: float) -> tuple[list[float], list[float]]:
    """(critical points, roots), both nondecreasing and clipped to [lo, hi]."""
    n = len(full) - 1
    if n == 1:
        return [], [min(max(-full[1], lo), hi)]
    critical = sorted(interlaced_roots(monic_derivative(full), lo, hi, xtol))
    nodes = [lo] + critical + [hi]
    return critical, [root_in(full, a, b, xtol) for a, b in zip(nodes[:-1], nodes[1:])]


def alternation_certificate(P: MonicPoly, form: ScaledForm, critical: Sequence[float]) -> bool:
    """True when P alternates in sign over -R, the critical points and +R.

    Nodes where |P| is below its evaluation noise count as roots of even
    multiplicity. Strict alternation at n + 1 ordered nodes places n roots
    between them by continuity.
    """
    n = P.degree
    if len(critical) != n - 1:
        return False
    full = P.full()
    nodes = [-form.radius] + list(critical) + [form.radius]
    for k, y in enumerate(nodes):
        x = form.to_original(y)
        value = horner(full, x)
        if abs(value) <= noise_floor(full, x):
            if k in (0, n):
                return False
            continue
        if (value > 0.0) != ((n - k) % 2 == 0):
            return False
    return True
