"""One-parameter curves of monic polynomials with polynomial coefficients in t."""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np
from numpy.polynomial import Polynomial

from app.core.logging import get_logger
from src.exceptions import BadIntervals, NotHyperbolicOnDomain, OutOfDomain
from src.poly.monic import MonicPoly
from src.realroots.roots import ordered_roots
from src.realroots.sturm import is_hyperbolic

logger = get_logger(__name__)

Interval = tuple[float, float]
PolyLike = Polynomial | Sequence[float]


def as_polynomial(f: PolyLike) -> Polynomial:
    """Coerce ascending coefficient lists to ``Polynomial``."""
    if isinstance(f, Polynomial):
        return f
    coef = [float(c) for c in f] or [0.0]
    return Polynomial(coef)


@dataclass(frozen=True, eq=False)
class CoeffCurve:
    """t -> Z^n + a_1(t) Z^(n-1) + ... + a_n(t) on a closed domain."""

    degree: int
    coeff_polys: tuple[Polynomial, ...]
    domain: Interval

    def __post_init__(self):
        if len(self.coeff_polys) != self.degree:
            raise ValueError(f"expected {self.degree} coefficient polynomials, got {len(self.coeff_polys)}")
        lo, hi = self.domain
        if not lo < hi:
            raise BadIntervals(f"degenerate domain [{lo}, {hi}]")

    @cached_property
    def tschirn(self) -> tuple[Polynomial, ...]:
        """(0, a~_2(t), ..., a~_n(t)): coefficients after the shift a_1(t)/n.

        Index 0 is the zero polynomial.
        """
        n = self.degree
        h = -self.coeff_polys[0] / n
        full = [Polynomial([1.0])] + list(self.coeff_polys)
        powers = [Polynomial([1.0])]
        for _ in range(n):
            powers.append(powers[-1] * h)
        reduced = [Polynomial([0.0])]
        for j in range(2, n + 1):
            acc = Polynomial([0.0])
            for k in range(j + 1):
                acc = acc + full[k] * math.comb(n - k, j - k) * powers[j - k]
            reduced.append(acc)
        return tuple(reduced)

    @property
    def a2(self) -> Polynomial:
        return self.tschirn[1] if self.degree >= 2 else Polynomial([0.0])

    def contains(self, t: float) -> bool:
        return self.domain[0] <= t <= self.domain[1]

    def coefficients_at(self, t: float) -> list[float]:
        return [float(a(t)) for a in self.coeff_polys]

    def tschirn_at(self, t: float) -> list[float]:
        return [float(a(t)) for a in self.tschirn]

    def restrict(self, domain: Interval) -> "CoeffCurve":
        return CoeffCurve(degree=self.degree, coeff_polys=self.coeff_polys, domain=tuple(map(float, domain)))


@dataclass(frozen=True, eq=False)
class GroundTruthFamily:
    """Curve built from explicit root functions r_1(t), ..., r_n(t)."""

    root_polys: tuple[Polynomial, ...]
    curve: CoeffCurve

    def roots_at(self, t: float) -> list[float]:
        return sorted(float(r(t)) for r in self.root_polys)


def make_curve(
    coeff_polys: Sequence[PolyLike],
    domain: Interval,
    validation_grid: int = 1024,
    tol: float = 1e-10,
    gcd_rtol: float = 1e-9,
) -> CoeffCurve:
    """Build a curve and check hyperbolicity on an equispaced validation grid.

    Raises:
        NotHyperbolicOnDomain: at the first grid point where some root is not real.
    """
    polys = tuple(as_polynomial(f) for f in coeff_polys)
    curve = CoeffCurve(degree=len(polys), coeff_polys=polys, domain=(float(domain[0]), float(domain[1])))
    for t in np.linspace(curve.domain[0], curve.domain[1], validation_grid):
        cert = is_hyperbolic(eval_curve(curve, float(t)), tol=tol, gcd_rtol=gcd_rtol)
        if not cert.is_hyperbolic:
            logger.warning("curve_not_hyperbolic", t=float(t), real_roots=cert.real_root_count, degree=curve.degree)
            raise NotHyperbolicOnDomain(float(t))
    return curve


def from_root_functions(root_polys: Sequence[PolyLike], domain: Interval) -> GroundTruthFamily:
    """Expand prod_j (Z - r_j(t)) exactly in the polynomial ring R[t]."""
    roots = tuple(as_polynomial(r) for r in root_polys)
    full = [Polynomial([1.0])]
    for r in roots:
        nxt = full + [Polynomial([0.0])]
        for j in range(1, len(nxt)):
            nxt[j] = nxt[j] - r * full[j - 1]
        full = nxt
    coeff_polys = tuple(c.trim() for c in full[1:])
    curve = CoeffCurve(degree=len(roots), coeff_polys=coeff_polys, domain=(float(domain[0]), float(domain[1])))
    return GroundTruthFamily(root_polys=roots, curve=curve)


def eval_curve(curve: CoeffCurve, t: float) -> MonicPoly:
    """P_a(t) for t in the domain."""
    if not curve.contains(t):
        raise OutOfDomain(f"t={t!r} not in [{curve.domain[0]}, {curve.domain[1]}]")
    return MonicPoly(degree=curve.degree, coeffs=tuple(curve.coefficients_at(t)))


def roots_on_grid(curve: CoeffCurve, grid: Sequence[float], tol: float = 1e-10) -> np.ndarray:
    """Ordered roots at each node, shape (len(grid), n)."""
    return np.array([ordered_roots(eval_curve(curve, float(t)), tol=tol).values for t in grid])
