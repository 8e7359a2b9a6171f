"""Error taxonomy shared across modules.

Validation errors are plain ValueError; the classes here carry the exit-code
semantics of the CLI contract (hypothesis failure 3, verification mismatch 4,
budget 5).
"""


class HypothesisError(Exception):
    """Inputs fall outside the hypotheses of the closed forms."""


class AmbiguousCancellationError(HypothesisError):
    """A term-wise valuation minimum is tied; the result would be a guess."""


class UnsupportedShapeError(HypothesisError):
    """Module shape outside engine scope (rank 2 / two-term rank r)."""


class VerificationError(Exception):
    """Predicted and oracle multisets differ."""


class BudgetError(Exception):
    """Enumeration budget exceeded."""
