"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an argument violates a documented precondition."""


class ConsistencyError(RuntimeError):
    """Raised when an internal invariant fails; always indicates a bug."""
