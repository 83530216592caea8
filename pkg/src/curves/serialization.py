"""JSON codec for curves and ground-truth families.

Polynomials in t are stored as ascending coefficient lists.
"""

import json
from pathlib import Path
from typing import Any

from src.curves.curve import CoeffCurve, GroundTruthFamily, as_polynomial, from_root_functions, make_curve


def curve_to_dict(curve: CoeffCurve) -> dict[str, Any]:
    return {
        "degree": curve.degree,
        "domain": list(curve.domain),
        "coeff_polys": [[float(c) for c in a.coef] for a in curve.coeff_polys],
    }


def family_to_dict(family: GroundTruthFamily) -> dict[str, Any]:
    data = curve_to_dict(family.curve)
    data["root_polys"] = [[float(c) for c in r.coef] for r in family.root_polys]
    return data


def curve_from_dict(data: dict[str, Any], validate: bool = True, validation_grid: int = 1024) -> CoeffCurve:
    """Decode a curve; families (with ``root_polys``) are rebuilt from their roots."""
    domain = (float(data["domain"][0]), float(data["domain"][1]))
    if "root_polys" in data:
        return from_root_functions(data["root_polys"], domain).curve
    degree = int(data["degree"])
    if len(data["coeff_polys"]) != degree:
        raise ValueError(f"degree {degree} but {len(data['coeff_polys'])} coefficient polynomials")
    if validate:
        return make_curve(data["coeff_polys"], domain, validation_grid=validation_grid)
    polys = tuple(as_polynomial(c) for c in data["coeff_polys"])
    return CoeffCurve(degree=degree, coeff_polys=polys, domain=domain)


def family_from_dict(data: dict[str, Any]) -> GroundTruthFamily:
    return from_root_functions(data["root_polys"], (float(data["domain"][0]), float(data["domain"][1])))


def load_curve(path: str | Path, validate: bool = True, validation_grid: int = 1024) -> CoeffCurve:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return curve_from_dict(data, validate=validate, validation_grid=validation_grid)


def dump_family(family: GroundTruthFamily) -> str:
    return json.dumps(family_to_dict(family))
