"""Domain errors raised by the polynomial, curve, bound and tracking modules.

Every error carries ``condition``: a short statement of the mathematical
condition that failed. The CLI prints it verbatim and exits with status 2.
"""


class HyperbolicError(ValueError):
    """Base class for all domain errors."""

    condition = "domain error"

    def __init__(self, detail: str = "", **context):
        self.detail = detail
        self.context = context
        message = self.condition if not detail else f"{self.condition}: {detail}"
        super().__init__(message)


class NotHyperbolic(HyperbolicError):
    condition = "not hyperbolic"


class IllConditioned(HyperbolicError):
    condition = "square-free decomposition numerically ambiguous"


class DegenerateScale(HyperbolicError):
    condition = "a2 = 0: rescaled polynomial undefined"


class CommonRoot(HyperbolicError):
    condition = "blocks share a root: factors not coprime"


class InvalidPartition(HyperbolicError):
    condition = "blocks must partition the root indices into two nonempty sets"


class NoConvergence(HyperbolicError):
    condition = "Newton refinement of the splitting did not converge"


class NotHyperbolicOnDomain(HyperbolicError):
    condition = "curve not hyperbolic on its domain"

    def __init__(self, t: float, detail: str = ""):
        self.t = t
        super().__init__(detail or f"first failure at t={t!r}", t=t)


class OutOfDomain(HyperbolicError):
    condition = "t outside the curve domain"


class BadIntervals(HyperbolicError):
    condition = "intervals must satisfy I0 strictly inside I1 inside the domain"


class ZeroA2(HyperbolicError):
    condition = "a2(t0) = 0: assumption interval is empty"


class DegenerateM2(HyperbolicError):
    condition = "m2 = 0: lower-multiplicity bound unavailable"


class HypothesisFailed(HyperbolicError):
    condition = "lemma hypothesis violated"


class InvalidN(HyperbolicError):
    condition = "grid size N must be >= 1"


class LemmaViolated(HyperbolicError):
    condition = "randomized inequality check reported violations"
