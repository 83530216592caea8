"""Metrics over the golden-value evaluation cases."""

import math
from dataclasses import dataclass, field


@dataclass
class CaseResult:
    """Result of evaluating a single golden case."""

    case_id: str
    kind: str
    category: str
    passed: bool
    errors: dict[str, float] = field(default_factory=dict)
    latency_seconds: float = 0.0
    failure: str | None = None


def pass_rate(results: list[CaseResult]) -> float:
    """Percentage of cases whose every quantity matched."""
    if not results:
        return 0.0
    passed = sum(1 for r in results if r.passed)
    return round(passed / len(results) * 100, 1)


def max_abs_error(results: list[CaseResult]) -> float:
    errors = [e for r in results for e in r.errors.values() if math.isfinite(e)]
    return max(errors, default=0.0)


def average_latency(results: list[CaseResult]) -> float:
    """Calculate average latency across all cases."""
    if not results:
        return 0.0
    return round(sum(r.latency_seconds for r in results) / len(results), 4)


def pass_rate_by_category(results: list[CaseResult]) -> dict[str, float]:
    groups: dict[str, list[CaseResult]] = {}
    for r in results:
        groups.setdefault(r.category, []).append(r)
    return {k: pass_rate(v) for k, v in sorted(groups.items())}
