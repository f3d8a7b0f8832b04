# singularities/errors.py


class PolynomialSyntaxError(ValueError):
    """Raised when polynomial text does not follow the input grammar."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(PolynomialSyntaxError):
    """Raised when the text names a variable outside the declared list."""


class HypothesisError(ValueError):
    """
    Raised when an input violates a hypothesis the engine relies on.

    The ``hypothesis`` attribute carries a short tag such as
    "isolated-initial-part" so callers and fixtures can match on it.
    """

    def __init__(self, hypothesis, message):
        super().__init__(f"{hypothesis}: {message}")
        self.hypothesis = hypothesis


class InfiniteQuotientError(ValueError):
    """Raised when a quotient ring has no finite monomial basis."""

    def __init__(self, variable):
        super().__init__(
            f"quotient is infinite-dimensional: no pure power of variable {variable} "
            "is a leading monomial"
        )
        self.variable = variable


class BadPrimeError(ValueError):
    def __init__(self, p, reasons):
        super().__init__(f"bad prime {p}: " + "; ".join(reasons))
        self.p = p
        self.reasons = tuple(reasons)


class CertificationError(RuntimeError):
    """An internal cross-check disagreed; the result cannot be trusted."""
