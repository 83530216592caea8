"""Ordered real roots of hyperbolic polynomials and root clustering."""

from dataclasses import dataclass
from typing import Sequence

from src.exceptions import NotHyperbolic
from src.poly.monic import MonicPoly, eval_poly
from src.realroots.isolation import interlaced_roots, scaled_form
from src.realroots.sturm import is_hyperbolic


@dataclass(frozen=True)
class OrderedRoots:
    """Nondecreasing roots lambda_1 <= ... <= lambda_n and max |P(lambda_j)|."""

    values: tuple[float, ...]
    residual: float

    def __len__(self) -> int:
        return len(self.values)


def ordered_roots(
    P: MonicPoly,
    tol: float = 1e-10,
    gcd_rtol: float = 1e-9,
    certify: bool = True,
) -> OrderedRoots:
    """All n real roots with multiplicity, nondecreasing, to absolute accuracy ``tol``.

    Roots are isolated and refined on the recentered, rescaled form of P and
    mapped back.
    """
    if certify:
        cert = is_hyperbolic(P, tol=tol, gcd_rtol=gcd_rtol)
        if not cert.is_hyperbolic:
            raise NotHyperbolic(f"{cert.real_root_count} of {P.degree} roots real")
    form = scaled_form(P)
    if form.rho == 0.0:
        values = [-form.shift] * P.degree
    else:
        xtol = min(tol / form.rho, 1e-12)
        scaled = interlaced_roots(form.coeffs, -form.radius, form.radius, xtol)
        values = sorted(form.to_original(y) for y in scaled)
    residual = max(abs(eval_poly(P, x)) for x in values)
    return OrderedRoots(values=tuple(values), residual=residual)


def cluster_roots(roots: OrderedRoots | Sequence[float], gap: float | None = None) -> list[list[int]]:
    """Split sorted roots into maximal runs whose consecutive spacing is < gap.

    The default gap is (max - min) / (4n).
    """
    values = list(roots.values if isinstance(roots, OrderedRoots) else roots)
    if not values:
        return []
    if gap is None:
        gap = (values[-1] - values[0]) / (4 * len(values))
        if gap == 0.0:
            return [list(range(len(values)))]
    if gap <= 0:
        raise ValueError("gap must be positive")
    blocks = [[0]]
    for i in range(1, len(values)):
        if values[i] - values[i - 1] < gap:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    return blocks
