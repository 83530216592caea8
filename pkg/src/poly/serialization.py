"""JSON and CSV codecs for monic polynomials."""

import csv
import io
import json
from pathlib import Path
from typing import Any

from src.poly.monic import MonicPoly


def monic_to_dict(P: MonicPoly) -> dict[str, Any]:
    return {"degree": P.degree, "coeffs": list(P.coeffs)}


def monic_from_dict(data: dict[str, Any]) -> MonicPoly:
    return MonicPoly(degree=int(data["degree"]), coeffs=tuple(float(c) for c in data["coeffs"]))


def monic_from_csv_row(row: list[str]) -> MonicPoly:
    """Parse ``degree, a1, ..., an``."""
    values = [v.strip() for v in row if v.strip()]
    degree = int(float(values[0]))
    return MonicPoly(degree=degree, coeffs=tuple(float(v) for v in values[1:]))


def parse_monic(text: str) -> MonicPoly:
    """Parse a polynomial from JSON (object) or a single CSV row."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return monic_from_dict(json.loads(stripped))
    rows = [r for r in csv.reader(io.StringIO(stripped)) if r]
    return monic_from_csv_row(rows[0])


def load_monic(path: str | Path) -> MonicPoly:
    return parse_monic(Path(path).read_text(encoding="utf-8"))


def dump_monic(P: MonicPoly) -> str:
    return json.dumps(monic_to_dict(P))
