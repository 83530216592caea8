"""Randomized checks of the coefficient, splitting and calculus inequalities.

Every check draws its instances from a seeded generator and counts the
instances on which the inequality fails. A clean run has zero violations.
"""

import itertools
import math
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np
from numpy.polynomial import Polynomial

from app.core.logging import get_logger
from src.bounds.lemmas import check_interpolation, glaeser_bound, spread_check, taylor_derivative_bounds
from src.curves.norms import lip
from src.exceptions import HyperbolicError
from src.poly.monic import MonicPoly, newton_sums, tschirnhausen
from src.realroots.roots import OrderedRoots
from src.realroots.splitting import factor_tschirn_b2, split
from src.realroots.sturm import is_hyperbolic

logger = get_logger(__name__)


@dataclass
class CheckResult:
    name: str
    trials: int
    violations: int
    worst_margin: float

    @property
    def passed(self) -> bool:
        return self.violations == 0


def _margin_update(worst: float, margin: float) -> float:
    return min(worst, margin)


def check_coefficient_sizes(rng: np.random.Generator, trials: int, degrees=range(2, 9)) -> list[CheckResult]:
    """|a~_i|^(1/i) <= sqrt(2)|a~_2|^(1/2) and |s_i|^(1/i) <= |s_2|^(1/2) for random real roots."""
    coeff = CheckResult("coefficient_sizes", 0, 0, math.inf)
    sums = CheckResult("newton_sums", 0, 0, math.inf)
    for n in degrees:
        for _ in range(trials):
            T = tschirnhausen(MonicPoly.from_roots(rng.uniform(-10.0, 10.0, size=n))).reduced
            a = T.coeffs
            bound = math.sqrt(2.0) * math.sqrt(abs(a[1]))
            s = newton_sums(T, n)
            s_bound = math.sqrt(abs(s[1]))
            for i in range(2, n + 1):
                margin = bound + 1e-10 + 1e-12 * bound - abs(a[i - 1]) ** (1.0 / i)
                coeff.violations += margin < 0
                coeff.worst_margin = _margin_update(coeff.worst_margin, margin)
                s_margin = s_bound + 1e-10 + 1e-12 * s_bound - abs(s[i - 1]) ** (1.0 / i)
                sums.violations += s_margin < 0
                sums.worst_margin = _margin_update(sums.worst_margin, s_margin)
            coeff.trials += 1
            sums.trials += 1
    return [coeff, sums]


def check_factor_sizes(rng: np.random.Generator, trials: int, max_degree: int = 6) -> CheckResult:
    """|b~_2| <= 2n|a~_2| for every nonempty proper root subset of a Tschirnhausen-form polynomial."""
    result = CheckResult("factor_sizes", 0, 0, math.inf)
    for _ in range(trials):
        n = int(rng.integers(2, max_degree + 1))
        roots = rng.uniform(-10.0, 10.0, size=n)
        roots = np.sort(roots - roots.mean())
        P = MonicPoly.from_roots(roots)
        known = OrderedRoots(values=tuple(float(r) for r in roots), residual=0.0)
        for k in range(1, n):
            for block in itertools.combinations(range(n), k):
                b2, a2 = factor_tschirn_b2(P, block, roots=known)
                rhs = 2 * n * abs(a2)
                margin = rhs + 1e-9 * max(1.0, rhs) - abs(b2)
                result.violations += margin < 0
                result.worst_margin = _margin_update(result.worst_margin, margin)
        result.trials += 1
    return result


def check_split_soundness(rng: np.random.Generator, trials: int, max_degree: int = 6, tol: float = 1e-10) -> CheckResult:
    """Splits across a gap >= 0.1 meet the residual, hyperbolicity and resultant requirements."""
    result = CheckResult("split_soundness", 0, 0, math.inf)
    for _ in range(trials):
        n = int(rng.integers(2, max_degree + 1))
        k = int(rng.integers(1, n))
        low = rng.uniform(-5.0, 0.0, size=k)
        high = low.max() + 0.1 + rng.uniform(0.0, 5.0, size=n - k)
        P = MonicPoly.from_roots(np.concatenate((low, high)))
        try:
            res = split(P, [list(range(k)), list(range(k, n))], tol=tol)
        except HyperbolicError as exc:
            logger.warning("split_check_failed", degree=n, error=str(exc))
            result.violations += 1
            result.trials += 1
            continue
        threshold = tol * max(1.0, max(abs(c) for c in P.coeffs))
        ok = (
            res.residual <= threshold
            and is_hyperbolic(res.factor_b).is_hyperbolic
            and is_hyperbolic(res.factor_c).is_hyperbolic
            and res.resultant_bc != 0.0
        )
        result.violations += not ok
        result.worst_margin = _margin_update(result.worst_margin, threshold - res.residual)
        result.trials += 1
    return result


def _random_poly(rng: np.random.Generator, max_degree: int = 6) -> Polynomial:
    degree = int(rng.integers(0, max_degree + 1))
    return Polynomial(rng.uniform(-2.0, 2.0, size=degree + 1))


def check_interpolation_bound(rng: np.random.Generator, trials: int, max_degree: int = 6) -> CheckResult:
    result = CheckResult("interpolation", 0, 0, math.inf)
    for _ in range(trials):
        degree = int(rng.integers(1, max_degree + 1))
        poly = Polynomial(rng.uniform(-2.0, 2.0, size=degree + 1))
        check = check_interpolation(poly, float(rng.uniform(0.1, 3.0)))
        result.violations += not check.ok
        if check.A > 0:
            slack = min(b - abs(c) for c, b in zip(check.coeffs, check.bounds))
            result.worst_margin = _margin_update(result.worst_margin, slack)
        result.trials += 1
    return result


def check_glaeser(rng: np.random.Generator, trials: int) -> CheckResult:
    """f = g^2 + c >= 0 with M chosen so that the interval and Lipschitz hypotheses hold."""
    result = CheckResult("glaeser", 0, 0, math.inf)
    I = (-1.0, 1.0)
    for _ in range(trials):
        g = Polynomial(rng.uniform(-2.0, 2.0, size=int(rng.integers(1, 4)) + 1))
        f = g * g + float(rng.uniform(0.0, 1.0))
        if rng.random() < 0.5:
            f = -f
        t0 = float(rng.uniform(-0.9, 0.9))
        dist = min(t0 - I[0], I[1] - t0)
        M = max(math.sqrt(lip(f, I, 1)), math.sqrt(abs(float(f(t0)))) / dist) * 1.01 + 1e-9
        report = glaeser_bound(f, t0, M, I, strict=False)
        if not report.hypotheses_ok:
            continue
        result.violations += not report.holds
        result.worst_margin = _margin_update(result.worst_margin, report.rhs - report.lhs)
        result.trials += 1
    return result


def check_taylor(rng: np.random.Generator, trials: int) -> CheckResult:
    result = CheckResult("taylor", 0, 0, math.inf)
    for _ in range(trials):
        f = _random_poly(rng)
        lo = float(rng.uniform(-2.0, 1.0))
        I = (lo, lo + float(rng.uniform(0.1, 2.0)))
        report = taylor_derivative_bounds(f, I, int(rng.integers(1, 7)))
        result.violations += not report.holds
        result.worst_margin = _margin_update(
            result.worst_margin, min(b - a for a, b in zip(report.actual, report.bounds))
        )
        result.trials += 1
    return result


def check_spread(rng: np.random.Generator, trials: int, max_degree: int = 8) -> CheckResult:
    result = CheckResult("spread", 0, 0, math.inf)
    for _ in range(trials):
        roots = rng.uniform(-10.0, 10.0, size=int(rng.integers(2, max_degree + 1)))
        check = spread_check(roots)
        result.violations += not check.ok
        result.trials += 1
    result.worst_margin = 0.0
    return result


def run_suite(seed: int = 0, trials: int = 10_000) -> list[CheckResult]:
    """All checks with one generator per check, derived from ``seed``.

    Splitting and factor checks run ``trials // 10`` instances (at least one).
    """
    small = max(1, trials // 10)
    checks: list[tuple[str, Callable[[np.random.Generator], list[CheckResult] | CheckResult]]] = [
        ("coefficient_sizes", lambda r: check_coefficient_sizes(r, trials)),
        ("factor_sizes", lambda r: check_factor_sizes(r, small)),
        ("split_soundness", lambda r: check_split_soundness(r, small)),
        ("interpolation", lambda r: check_interpolation_bound(r, trials)),
        ("glaeser", lambda r: check_glaeser(r, trials)),
        ("taylor", lambda r: check_taylor(r, trials)),
        ("spread", lambda r: check_spread(r, trials)),
    ]
    results: list[CheckResult] = []
    for i, (name, check) in enumerate(checks):
        outcome = check(np.random.default_rng([seed, i]))
        results.extend(outcome if isinstance(outcome, list) else [outcome])
    for r in results:
        logger.info("lemma_check_done", check=r.name, trials=r.trials, violations=r.violations)
    return results


def suite_report(results: list[CheckResult]) -> dict:
    return {
        "checks": [asdict(r) | {"passed": r.passed} for r in results],
        "violations": sum(r.violations for r in results),
    }
