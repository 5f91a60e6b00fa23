"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Raised for malformed graphs, matchings, moves or files."""


class ParseError(InvalidInput):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class NotApplicable(ValueError):
    """A criterion was asked about a graph outside its hypothesis."""


class CriterionNotEvaluated(RuntimeError):
    """The host is larger than the configured evaluation cap."""


class BudgetExceeded(RuntimeError):
    """Search would exceed its resource budget; no verdict is claimed."""


class InvariantViolation(AssertionError):
    pass
