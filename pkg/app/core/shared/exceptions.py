"""Shared exception classes."""

from typing import Any, Optional, Sequence


class BaseAppException(Exception):
    """Base exception for application errors."""

    def __init__(self, message: str, error_code: Optional[str] = None):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


class ValidationError(BaseAppException):
    """Raised when a value object or entity invariant fails."""
    pass


class ConfigurationError(ValidationError):
    """Raised when the run configuration or a model is malformed."""

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        if field:
            message = f"{field}: {message}"
        super().__init__(message, error_code="config_error")


class DomainError(BaseAppException):
    """Raised when an operation is undefined on its input."""
    pass


class PreconditionError(BaseAppException):
    """Raised when an operation precondition does not hold."""
    pass


class NotFoundError(BaseAppException):
    """Raised when a resource is not found."""
    pass


class MissingEntryError(NotFoundError):
    """Raised when an invariant table has no value for (n, beta)."""

    def __init__(self, kind: str, n: int, beta: Sequence[int], detail: Any = None):
        self.kind = kind
        self.n = n
        self.beta = tuple(beta)
        message = f"missing {kind} entry at (n={n}, beta={list(self.beta)})"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message, error_code="missing_entry")
