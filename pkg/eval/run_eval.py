"""Evaluation runner for the bound and calculus computations.

Loads golden cases, recomputes each quantity, and prints a summary table
with pass rate, worst absolute error and latency.
"""

import json
import time
from pathlib import Path
from typing import Any, Callable

from numpy.polynomial import Polynomial

from eval.metrics import CaseResult, average_latency, max_abs_error, pass_rate, pass_rate_by_category
from src.bounds.lemmas import glaeser_bound, interpolation_coeff_bound, taylor_derivative_bounds
from src.bounds.report import alpha_from_roots, bound_lower_multiplicity
from src.calibration.calibrate import evaluate_family
from src.curves.curve import from_root_functions
from src.poly.monic import MonicPoly, tschirnhausen
from src.realroots.splitting import resultant
from src.tracking.tracks import empirical_lipschitz, sample_grid, track_ordered

TOLERANCE = 1e-8


def _pair(values: list[float]) -> tuple[float, float]:
    return float(values[0]), float(values[1])


def eval_bound(case: dict[str, Any]) -> dict[str, float]:
    I0, I1 = _pair(case["I0"]), _pair(case["I1"])
    curve = from_root_functions(case["root_polys"], I1).curve
    p = case.get("p", curve.degree)
    return bound_lower_multiplicity(curve, I0, I1, p, alpha_grid=256).to_dict()


def eval_lipschitz(case: dict[str, Any]) -> dict[str, float]:
    I0 = _pair(case["I0"])
    curve = from_root_functions(case["root_polys"], I0).curve
    tracks = track_ordered(curve, sample_grid(I0, case["grid"]))
    return {"overall": empirical_lipschitz(tracks).overall}


def eval_tschirn(case: dict[str, Any]) -> dict[str, float]:
    T = tschirnhausen(MonicPoly(degree=case["degree"], coeffs=tuple(case["coeffs"])))
    return {"shift": T.shift, "a2": T.a2}


def eval_resultant(case: dict[str, Any]) -> dict[str, float]:
    b = MonicPoly(degree=len(case["b"]), coeffs=tuple(case["b"]))
    c = MonicPoly(degree=len(case["c"]), coeffs=tuple(case["c"]))
    return {"resultant": resultant(b, c)}


def eval_interpolation(case: dict[str, Any]) -> dict[str, float]:
    bounds = interpolation_coeff_bound(case["n"], case["A"], case["B"])
    return {f"bound_{i}": b for i, b in enumerate(bounds)}


def eval_taylor(case: dict[str, Any]) -> dict[str, float]:
    report = taylor_derivative_bounds(Polynomial(case["coef"]), _pair(case["I"]), case["m"])
    out = {f"bound_{k}": b for k, b in enumerate(report.bounds, start=1)}
    out.update({f"actual_{k}": a for k, a in enumerate(report.actual, start=1)})
    return out


def eval_glaeser(case: dict[str, Any]) -> dict[str, float]:
    report = glaeser_bound(Polynomial(case["coef"]), case["t0"], case["M"], _pair(case["I"]))
    return {"lhs": report.lhs, "rhs": report.rhs}


def eval_alpha(case: dict[str, Any]) -> dict[str, float]:
    return {"alpha": alpha_from_roots(case["roots"], case["p"])}


def eval_calibrate(case: dict[str, Any]) -> dict[str, float]:
    I0, I1 = _pair(case["I0"]), _pair(case["I1"])
    family = from_root_functions(case["root_polys"], I1)
    result = evaluate_family(family, I0, I1, grid=case["grid"], assumption_points=0)
    return {"ratio": result.ratio}


EVALUATORS: dict[str, Callable[[dict[str, Any]], dict[str, float]]] = {
    "bound": eval_bound,
    "lipschitz": eval_lipschitz,
    "tschirn": eval_tschirn,
    "resultant": eval_resultant,
    "interpolation": eval_interpolation,
    "taylor": eval_taylor,
    "glaeser": eval_glaeser,
    "alpha": eval_alpha,
    "calibrate": eval_calibrate,
}


def evaluate_case(tc: dict[str, Any]) -> CaseResult:
    start = time.perf_counter()
    try:
        actual = EVALUATORS[tc["kind"]](tc["input"])
    except Exception as e:
        return CaseResult(tc["id"], tc["kind"], tc["category"], False, failure=str(e))
    latency = time.perf_counter() - start

    errors = {}
    for name, expected in tc["expected"].items():
        value = actual.get(name)
        errors[name] = float("inf") if value is None else abs(float(value) - expected)
    passed = all(e <= TOLERANCE * max(1.0, abs(tc["expected"][k])) for k, e in errors.items())
    return CaseResult(tc["id"], tc["kind"], tc["category"], passed, errors, latency)


def run_evaluation() -> list[CaseResult]:
    """Run the full evaluation suite against the golden cases."""
    test_cases_path = Path(__file__).parent / "test_cases.json"
    with open(test_cases_path) as f:
        test_cases = json.load(f)

    results: list[CaseResult] = []

    print("\n" + "=" * 80)
    print("HYPERBOLIC ROOT BOUNDS - Evaluation Suite")
    print("=" * 80)
    print(f"\nRunning {len(test_cases)} golden cases...\n")

    for i, tc in enumerate(test_cases, 1):
        result = evaluate_case(tc)
        results.append(result)
        if result.failure is not None:
            print(f"[{i}/{len(test_cases)}] {tc['id']}: ERROR: {result.failure}")
            continue
        status = "PASS" if result.passed else "FAIL"
        worst = max(result.errors.values(), default=0.0)
        print(f"[{i}/{len(test_cases)}] {tc['id']}: {status} | max error {worst:.3e} | {result.latency_seconds:.3f}s")

    print("\n" + "=" * 80)
    print("EVALUATION SUMMARY")
    print("=" * 80)
    print(f"  Pass Rate:          {pass_rate(results)}%")
    print(f"  Max Abs Error:      {max_abs_error(results):.3e}")
    print(f"  Average Latency:    {average_latency(results)}s")
    print(f"  By Category:        {pass_rate_by_category(results)}")
    print("=" * 80)
    return results


if __name__ == "__main__":
    run_evaluation()
