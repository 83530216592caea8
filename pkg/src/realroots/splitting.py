"""Certified numeric splitting P = P_b * P_c along a partition of the roots."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from app.core.logging import get_logger
from src.exceptions import CommonRoot, InvalidPartition, NoConvergence
from src.poly.monic import MonicPoly, tschirnhausen
from src.realroots.roots import OrderedRoots, cluster_roots, ordered_roots

logger = get_logger(__name__)


@dataclass(frozen=True)
class SplitResult:
    factor_b: MonicPoly
    factor_c: MonicPoly
    residual: float
    resultant_bc: float
    newton_iters: int
    initial_residual: float

    def to_dict(self) -> dict:
        return {
            "b": list(self.factor_b.coeffs),
            "c": list(self.factor_c.coeffs),
            "residual": self.residual,
            "resultant": self.resultant_bc,
        }


def sylvester_matrix(f: Sequence[float], g: Sequence[float]) -> np.ndarray:
    """Sylvester matrix of two descending coefficient sequences."""
    m, k = len(f) - 1, len(g) - 1
    size = m + k
    S = np.zeros((size, size))
    for row in range(k):
        S[row, row : row + m + 1] = f
    for row in range(m):
        S[k + row, row : row + k + 1] = g
    return S


def resultant(P_b: MonicPoly, P_c: MonicPoly) -> float:
    """Determinant of the Sylvester matrix of P_b and P_c."""
    return float(np.linalg.det(sylvester_matrix(P_b.full(), P_c.full())))


def _product_residual(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    prod = np.convolve(np.concatenate(([1.0], b)), np.concatenate(([1.0], c)))
    return prod[1:] - a


def _jacobian(b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Derivative of (b, c) -> coefficients of P_b P_c (leading 1 dropped)."""
    k, m = len(b), len(c)
    n = k + m
    full_b = np.concatenate(([1.0], b))
    full_c = np.concatenate(([1.0], c))
    J = np.zeros((n, n))
    for i in range(k):
        J[i : i + m + 1, i] = full_c
    for j in range(m):
        J[j : j + k + 1, k + j] = full_b
    return J


def _validate_blocks(n: int, blocks: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    if len(blocks) != 2:
        raise InvalidPartition(f"got {len(blocks)} blocks")
    block_b, block_c = sorted(blocks[0]), sorted(blocks[1])
    if set(block_b) & set(block_c):
        raise CommonRoot(f"index sets overlap at {sorted(set(block_b) & set(block_c))}")
    if not block_b or not block_c or sorted(block_b + block_c) != list(range(n)):
        raise InvalidPartition(f"blocks {block_b}, {block_c} for degree {n}")
    return block_b, block_c


def split(
    P: MonicPoly,
    partition: Sequence[Sequence[int]],
    tol: float = 1e-10,
    max_iter: int = 50,
    roots: OrderedRoots | None = None,
) -> SplitResult:
    """Factor P along two blocks of ordered-root indices and Newton-refine the factors.

    The stopping test is max |P - P_b P_c| <= tol * max(1, max |a_j|).
    """
    n = P.degree
    block_b, block_c = _validate_blocks(n, partition)
    if roots is None:
        roots = ordered_roots(P, tol=tol)
    vals = roots.values
    separation = min(abs(vals[i] - vals[j]) for i in block_b for j in block_c)
    scale = max(1.0, max(abs(v) for v in vals))
    if separation <= tol * scale:
        raise CommonRoot(f"cross-block distance {separation:.3e}")

    a = np.array(P.coeffs)
    threshold = tol * max(1.0, float(np.max(np.abs(a))))
    radius = P.cauchy_radius()
    b = np.array(MonicPoly.from_roots([vals[i] for i in block_b]).coeffs)
    c = np.array(MonicPoly.from_roots([vals[j] for j in block_c]).coeffs)
    F = _product_residual(a, b, c)
    initial = float(np.max(np.abs(F)))
    best = (initial, b, c)
    iters = 0
    while best[0] > threshold:
        if iters >= max_iter:
            raise NoConvergence(f"residual {best[0]:.3e} after {iters} iterations")
        try:
            step = np.linalg.solve(_jacobian(b, c), -F)
        except np.linalg.LinAlgError as exc:
            raise NoConvergence("singular Jacobian (vanishing resultant)") from exc
        if float(np.max(np.abs(step))) > radius:
            raise NoConvergence(f"step {np.max(np.abs(step)):.3e} exceeds Cauchy radius {radius:.3e}")
        k = len(b)
        b, c = b + step[:k], c + step[k:]
        F = _product_residual(a, b, c)
        iters += 1
        res = float(np.max(np.abs(F)))
        if res < best[0]:
            best = (res, b, c)
        elif iters > 2 and res >= best[0]:
            # rounding floor reached
            break
    residual, b, c = best
    if residual > threshold:
        raise NoConvergence(f"residual {residual:.3e} stalled above {threshold:.3e}")
    factor_b, factor_c = MonicPoly.from_coeffs(b), MonicPoly.from_coeffs(c)
    res_bc = resultant(factor_b, factor_c)
    logger.debug("split_converged", degree=n, iters=iters, residual=residual, resultant=res_bc)
    return SplitResult(
        factor_b=factor_b,
        factor_c=factor_c,
        residual=residual,
        resultant_bc=res_bc,
        newton_iters=iters,
        initial_residual=initial,
    )


def split_by_clusters(
    P: MonicPoly, gap: float | None = None, tol: float = 1e-10, max_iter: int = 50
) -> SplitResult:
    """Split off the lowest root cluster from the rest."""
    roots = ordered_roots(P, tol=tol)
    blocks = cluster_roots(roots, gap)
    if len(blocks) < 2:
        raise CommonRoot("all roots form a single cluster")
    rest = [i for block in blocks[1:] for i in block]
    return split(P, [blocks[0], rest], tol=tol, max_iter=max_iter, roots=roots)


def factor_tschirn_b2(P: MonicPoly, block: Sequence[int], roots: OrderedRoots | None = None) -> tuple[float, float]:
    """(b2, a2) of the Tschirnhausen forms of the block factor and of P itself."""
    if roots is None:
        roots = ordered_roots(P)
    factor = MonicPoly.from_roots([roots.values[i] for i in block])
    b2 = tschirnhausen(factor).a2
    return b2, tschirnhausen(P).a2
