"""Exception types shared across the package."""


class InfeasibleParametersError(ValueError):
    """No parameter assignment satisfies the requested constraints."""


class CorruptCodewordError(Exception):
    """The input cannot be a codeword of the declared code."""


class BudgetExceededError(Exception):
    """An enumeration would exceed the configured work budget.

    Carries the estimated cost so callers can report how far over budget
    the request was instead of silently grinding away.
    """

    def __init__(self, message: str, cost: int, budget: int):
        super().__init__(message)
        self.cost = cost
        self.budget = budget
