class EOPError(Exception):
    pass


class InputError(EOPError, ValueError):
    """Malformed graph, bad vertex or edge reference, or a violated precondition."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InternalError(EOPError, RuntimeError):
    """An internal consistency check failed; indicates a bug, never bad input."""


class BudgetExceeded(EOPError):
    """Exhaustive search hit its budget. ``best`` holds the best solution seen so far."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
