"""Shared utility functions."""

import csv
import json
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterable, Sequence

from app.core.logging import get_logger

logger = get_logger(__name__)


@contextmanager
def timer(label: str):
    """Context manager to measure and log execution time."""
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    logger.info("timer", label=label, elapsed_seconds=round(elapsed, 3))


def parse_interval(text: str) -> tuple[float, float]:
    """Parse ``a,b`` into a pair of floats with a < b."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ValueError(f"interval must be 'a,b', got {text!r}")
    lo, hi = float(parts[0]), float(parts[1])
    if not lo < hi:
        raise ValueError(f"interval endpoints must satisfy a < b, got {text!r}")
    return lo, hi


def format_float(x: float) -> str:
    """Full double precision (17 significant digits)."""
    return format(float(x), ".17g")


def dumps_json(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def write_json(path: str | Path, data: Any) -> None:
    Path(path).write_text(dumps_json(data), encoding="utf-8")


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    """Write rows with floats at full precision; newline is always LF."""
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_float(v) if isinstance(v, float) else v for v in row])


def format_table(rows: Sequence[tuple[str, Any]]) -> str:
    """Fixed-order two-column (quantity, value) table."""
    width = max((len(name) for name, _ in rows), default=0)
    lines = []
    for name, value in rows:
        shown = "-" if value is None else (format_float(value) if isinstance(value, float) else str(value))
        lines.append(f"{name.ljust(width)}  {shown}")
    return "\n".join(lines) + "\n"
