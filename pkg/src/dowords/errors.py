class DowError(ValueError):
    """Raised for malformed words, arrangements or sequence files."""


class BudgetExceeded(RuntimeError):
    """An exhaustive operation was asked for a size above its budget.

    Counting by recurrence has no such limit, so callers that hit this
    should fall back to :mod:`dowords.count`.
    """

    def __init__(self, what, size, budget):
        super().__init__(f"{what}: size {size} exceeds budget {budget}")
        self.size = size
        self.budget = budget
