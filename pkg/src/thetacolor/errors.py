"""Error types shared across the package."""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured budget.

    Raised up front, before any partial work could be mistaken for a full
    answer.  Exceeding a cap is always an error, never a silent
    approximation.
    """

    def __init__(self, message: str, *, budget: int | None = None, required: int | None = None):
        if budget is not None and required is not None:
            message = f"{message} (needs {required}, budget {budget})"
        super().__init__(message)
        self.budget = budget
        self.required = required
