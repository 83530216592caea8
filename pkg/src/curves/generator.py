"""Random ground-truth families and the homogeneity transforms used to test bounds."""

import numpy as np
from numpy.polynomial import Polynomial

from src.curves.curve import GroundTruthFamily, Interval, from_root_functions


def random_family(
    n: int,
    rng: np.random.Generator,
    root_degree: int = 4,
    coeff_range: float = 2.0,
    domain: Interval = (-2.0, 2.0),
) -> GroundTruthFamily:
    """n root polynomials of degree <= root_degree, coefficients uniform in [-coeff_range, coeff_range]."""
    roots = [
        Polynomial(rng.uniform(-coeff_range, coeff_range, size=root_degree + 1))
        for _ in range(n)
    ]
    return from_root_functions(roots, domain)


def scale_roots(family: GroundTruthFamily, c: float) -> GroundTruthFamily:
    """Every root function multiplied by c."""
    return from_root_functions([r * c for r in family.root_polys], family.curve.domain)


def reparametrize(family: GroundTruthFamily, s: float) -> GroundTruthFamily:
    """Roots r_j(s t) on the domain divided by s (s > 0)."""
    if s <= 0:
        raise ValueError("s must be positive")
    lo, hi = family.curve.domain
    roots = [Polynomial(r.coef * s ** np.arange(len(r.coef))) for r in family.root_polys]
    return from_root_functions(roots, (lo / s, hi / s))


def scale_interval(interval: Interval, s: float) -> Interval:
    return (interval[0] / s, interval[1] / s)
