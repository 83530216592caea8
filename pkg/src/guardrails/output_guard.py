"""Output sanitizing so that every report serializes to strict JSON."""

import math
from typing import Any

import numpy as np

from app.core.logging import get_logger

logger = get_logger(__name__)


class OutputGuard:
    """Converts reports into JSON-safe values."""

    def sanitize(self, value: Any) -> Any:
        """Recursively clean a report.

        Non-finite floats become the strings "inf", "-inf" and "nan"; numpy
        scalars and arrays become Python floats and lists; tuples become lists.
        Dict keys keep their order.

        Args:
            value: Report value (dict, list, scalar or numpy object).

        Returns:
            A structure accepted by ``json.dumps(..., allow_nan=False)``.
        """
        if isinstance(value, dict):
            return {str(k): self.sanitize(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [self.sanitize(v) for v in value]
        if isinstance(value, np.ndarray):
            return [self.sanitize(v) for v in value.tolist()]
        if isinstance(value, (bool, np.bool_)):
            return bool(value)
        if isinstance(value, (int, np.integer)):
            return int(value)
        if isinstance(value, (float, np.floating)):
            return self._float(float(value))
        return value

    @staticmethod
    def _float(x: float) -> float | str:
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
