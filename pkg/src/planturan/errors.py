from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """A search hit its node budget or a size limit before finishing.

    Never interpreted as a negative answer: callers must report it as
    "unknown", not as "absent" or "free".
    """

    def __init__(self, message: str, *, used: int | None = None, limit: int | None = None):
        super().__init__(message)
        self.used = used
        self.limit = limit
