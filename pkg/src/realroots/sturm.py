"""Hyperbolicity certification by sign alternation, with a Sturm fallback.

A hyperbolic P of degree n alternates in sign over the Cauchy window ends and
its n - 1 critical points; n + 1 alternating values certify n real roots.
When alternation fails, the signed remainder chain of (p, p') is built. It
ends in a numeric gcd g. Sign variations at +-R count the distinct real
roots of p; multiplicities come from recursing on g, whose roots are the
multiple roots of p with multiplicity lowered by one.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.exceptions import IllConditioned
from src.poly.monic import MonicPoly, horner
from src.realroots.isolation import ROUNDOFF, alternation_certificate, interlaced_roots, monic_derivative, scaled_form


@dataclass(frozen=True)
class HyperbolicityCertificate:
    is_hyperbolic: bool
    real_root_count: int
    cauchy_radius: float


def polydiv(u: Sequence[float], v: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    """Long division of descending coefficient arrays without any trimming."""
    u = np.array(u, dtype=float)
    v = np.asarray(v, dtype=float)
    m, n = len(u) - 1, len(v) - 1
    if m < n:
        return np.zeros(1), u
    q = np.zeros(m - n + 1)
    for k in range(m - n + 1):
        d = u[k] / v[0]
        q[k] = d
        u[k : k + n + 1] -= d * v
    return q, u[m - n + 1 :]


def _trim_leading(p: np.ndarray, threshold: float) -> np.ndarray:
    idx = 0
    while idx < len(p) and abs(p[idx]) <= threshold:
        idx += 1
    return p[idx:]


def _unit(p: np.ndarray) -> np.ndarray:
    # positive rescaling keeps every sign used by the variation count
    return p / np.max(np.abs(p))


def sturm_chain(p: Sequence[float], rtol: float = 1e-9) -> list[np.ndarray]:
    """Normalized Sturm chain p, p', -rem(...), ...; the last element is gcd(p, p').

    A remainder whose coefficients are all below ``rtol`` (relative to the
    unit dividend) is zero. Otherwise only leading coefficients at the
    roundoff level of the division are dropped.
    """
    p0 = _unit(np.asarray(p, dtype=float))
    if len(p0) == 1:
        return [p0]
    chain = [p0, _unit(np.polyder(p0))]
    while len(chain[-1]) > 1:
        q, r = polydiv(chain[-2], chain[-1])
        if len(r) == 0 or np.max(np.abs(r)) <= rtol:
            break
        r = _trim_leading(r, ROUNDOFF * len(chain[-2]) * (1.0 + float(np.max(np.abs(q)))))
        if len(r) == 0:
            break
        chain.append(-_unit(r))
    return chain


def sign_variations(chain: list[np.ndarray], x: float, zero_tol: float = 0.0) -> int:
    signs = []
    for p in chain:
        v = horner(p, x)
        if abs(v) > zero_tol:
            signs.append(v > 0)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_real_roots(p: Sequence[float], rtol: float = 1e-9, zero_tol: float = 0.0) -> int:
    """Number of real roots of p counted with multiplicity."""
    p = np.asarray(p, dtype=float)
    p = p / p[0]
    degree = len(p) - 1
    if degree == 0:
        return 0
    chain = sturm_chain(p, rtol)
    gcd = chain[-1]
    radius = 1.0 + float(np.max(np.abs(p[1:])))
    distinct = sign_variations(chain, -radius, zero_tol) - sign_variations(chain, radius, zero_tol)
    if distinct < 0 or distinct > degree - (len(gcd) - 1):
        raise IllConditioned(f"Sturm count {distinct} inconsistent with degree {degree}")
    if len(gcd) == 1:
        return distinct
    return distinct + count_real_roots(gcd, rtol, zero_tol)


def is_hyperbolic(P: MonicPoly, tol: float = 1e-10, gcd_rtol: float = 1e-9) -> HyperbolicityCertificate:
    """Certify that all roots of P are real.

    Both checks run on the recentered, rescaled form of P, whose roots lie in
    [-2, 2]; real-root counts are invariant under both maps.
    """
    n = P.degree
    radius = P.cauchy_radius()
    form = scaled_form(P)
    if n == 1 or form.rho == 0.0:
        count = n
    else:
        critical = interlaced_roots(monic_derivative(form.coeffs), -form.radius, form.radius, 1e-15)
        if alternation_certificate(P, form, sorted(critical)):
            count = n
        else:
            count = count_real_roots(form.coeffs, gcd_rtol, tol)
    return HyperbolicityCertificate(is_hyperbolic=count == n, real_root_count=count, cauchy_radius=radius)
