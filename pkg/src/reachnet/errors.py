"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed network text input."""


class BudgetExceededError(RuntimeError):
    """A state-space or node budget was hit before the answer was decided.

    Deliberately distinct from a negative result: the caller learns nothing
    about feasibility when this is raised.
    """


class RetriesExceededError(RuntimeError):
    """The randomized builder exhausted its resampling budget."""


class CapExhaustedError(RuntimeError):
    """Every length up to an explicit cap was exhaustively infeasible."""
