"""Shared exception types."""


class MalformedNetworkError(ValueError):
    """A network violates a structural invariant."""


class ParseError(MalformedNetworkError):
    """Edge-list syntax or semantic error, carrying the 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class DisconnectedNetworkError(ValueError):
    """Resistance queries require a connected network."""


class SingularSystemError(ArithmeticError):
    """The grounded conductance system has no usable pivot."""


class ReductionError(ValueError):
    """A rewrite precondition failed or no rewrite applies."""


class BudgetExceededError(RuntimeError):
    """A computation would exceed the configured vertex budget."""
