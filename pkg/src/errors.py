"""Exception hierarchy shared by every package."""


class SimplicialCodesError(Exception):
    """Base class for all errors raised by this project."""


class DimensionMismatchError(SimplicialCodesError, ValueError):
    """Vectors, complexes or matrices live in different ambient dimensions."""


class ConstructionError(SimplicialCodesError, ValueError):
    """A construction or predictor precondition does not hold."""


class DefiningSetParseError(ConstructionError):
    """Malformed defining-set file."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class ZeroDualError(ConstructionError):
    """The dual of a full-length code is the zero code."""


class BudgetExceededError(SimplicialCodesError, RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""


class RankConsistencyError(SimplicialCodesError, ArithmeticError):
    """An internal consistency check failed (repetition factor, bound)."""


class OptimalityTableError(SimplicialCodesError, ValueError):
    """Malformed optimality table."""
