"""Monic real polynomials, Tschirnhausen normalization and Newton sums.

Coefficients follow the convention P(Z) = Z^n + a_1 Z^(n-1) + ... + a_n, so
``coeffs[j-1]`` multiplies Z^(n-j).
"""

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from src.exceptions import DegenerateScale


@dataclass(frozen=True)
class MonicPoly:
    """Degree-n monic real polynomial stored by its non-leading coefficients."""

    degree: int
    coeffs: tuple[float, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be a positive integer")
        if len(self.coeffs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[float]) -> "MonicPoly":
        values = tuple(float(c) for c in coeffs)
        return cls(degree=len(values), coeffs=values)

    @classmethod
    def from_roots(cls, roots: Sequence[float]) -> "MonicPoly":
        """Build prod (Z - r_j) by repeated multiplication with linear factors."""
        full = [1.0]
        for r in roots:
            nxt = full + [0.0]
            for j in range(1, len(nxt)):
                nxt[j] -= float(r) * full[j - 1]
            full = nxt
        return cls.from_coeffs(full[1:])

    def full(self) -> np.ndarray:
        """Descending coefficient array including the leading 1."""
        return np.array((1.0,) + self.coeffs)

    def cauchy_radius(self) -> float:
        return 1.0 + max((abs(c) for c in self.coeffs), default=0.0)

    def __call__(self, z: float) -> float:
        return eval_poly(self, z)


@dataclass(frozen=True)
class TschirnForm:
    """Recentered polynomial: roots of ``reduced`` are roots of the source plus ``shift``."""

    shift: float
    reduced: MonicPoly

    @property
    def a2(self) -> float:
        return self.reduced.coeffs[1] if self.reduced.degree >= 2 else 0.0

    @property
    def degree(self) -> int:
        return self.reduced.degree


def horner(full: Sequence[float], z: float) -> float:
    """Evaluate a descending coefficient sequence at z."""
    acc = 0.0
    for c in full:
        acc = acc * z + c
    return acc


def eval_poly(P: MonicPoly, z: float) -> float:
    """Horner value of P at z."""
    acc = 1.0
    for c in P.coeffs:
        acc = acc * z + c
    return acc


def tschirnhausen(P: MonicPoly) -> TschirnForm:
    """Substitute Z -> Z - a_1/n, annihilating the Z^(n-1) coefficient exactly."""
    n = P.degree
    shift = P.coeffs[0] / n
    h = -shift
    full = (1.0,) + P.coeffs
    reduced = []
    for j in range(1, n + 1):
        # coefficient of Z^(n-j) in sum_k c_k (Z + h)^(n-k), highest k-degree first
        acc = 0.0
        for k in range(j + 1):
            acc += full[k] * math.comb(n - k, j - k) * h ** (j - k)
        reduced.append(acc)
    reduced[0] = 0.0
    return TschirnForm(shift=shift, reduced=MonicPoly.from_coeffs(reduced))


def newton_sums(P: MonicPoly, k: int) -> list[float]:
    """Power sums s_1..s_k of the roots via Newton's identities."""
    if k < 1:
        raise ValueError("k must be >= 1")
    a = P.coeffs
    n = P.degree
    s: list[float] = []
    for m in range(1, k + 1):
        am = a[m - 1] if m <= n else 0.0
        acc = -m * am
        for j in range(1, m):
            if j <= n:
                acc -= a[j - 1] * s[m - j - 1]
        s.append(acc)
    return s


def normalize_scale(T: TschirnForm | MonicPoly) -> MonicPoly:
    """Rescale to |a2|^(-n/2) P(|a2|^(1/2) Z), fixing the second coefficient at -1."""
    if isinstance(T, MonicPoly):
        T = tschirnhausen(T)
    a2 = T.a2
    if a2 == 0.0:
        raise DegenerateScale(f"degree {T.degree}")
    scale = math.sqrt(abs(a2))
    coeffs = [c / scale ** j for j, c in enumerate(T.reduced.coeffs, start=1)]
    coeffs[0] = 0.0
    coeffs[1] = -1.0 if a2 < 0 else 1.0
    return MonicPoly.from_coeffs(coeffs)


def derivative_poly(P: MonicPoly) -> np.ndarray:
    """Formal derivative as a descending coefficient array (not monic)."""
    n = P.degree
    full = P.full()
    return np.array([full[j] * (n - j) for j in range(n)])


def tschirnhausen_bound_check(T: TschirnForm) -> tuple[float, float]:
    """Ratios max|a_i|^(1/i) / |a2|^(1/2) and max|s_i|^(1/i) / |s2|^(1/2).

    For hyperbolic input the first is at most sqrt(2) and the second at most 1.
    Returns (0, 0) when a2 = 0.
    """
    n = T.degree
    if n < 2 or T.a2 == 0.0:
        return 0.0, 0.0
    root_a2 = math.sqrt(abs(T.a2))
    coeff_ratio = max(abs(T.reduced.coeffs[i - 1]) ** (1.0 / i) for i in range(2, n + 1)) / root_a2
    s = newton_sums(T.reduced, n)
    root_s2 = math.sqrt(abs(s[1]))
    sum_ratio = max(abs(s[i - 1]) ** (1.0 / i) for i in range(2, n + 1)) / root_s2
    return coeff_ratio, sum_ratio
