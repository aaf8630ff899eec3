"""Error types shared across the package.

Every exception carries a short machine-readable ``code`` so the CLI can
emit stable one-line JSON diagnostics and map failures to exit codes.
"""

from __future__ import annotations


class InlsError(Exception):
    """Base class; ``code`` is a stable machine-readable identifier."""

    code = "ERROR"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class HypothesisViolation(InlsError):
    """Problem parameters violate the basic parameter hypothesis."""

    code = "HYPOTHESIS_VIOLATION"


class DomainError(InlsError):
    """An argument lies outside the domain of the operation."""

    code = "DOMAIN"


class EmptyGridError(InlsError):
    code = "EMPTY_GRID"


class ZeroProfileError(InlsError):
    code = "ZERO_PROFILE"


class SearchFailed(InlsError):
    """Internal bracketing/bisection search exhausted its budget."""

    code = "SEARCH_FAILED"


class NotCoerciveConfig(InlsError):
    """Term list does not define a coercive minimization problem."""

    code = "NOT_COERCIVE_CONFIG"


class SingularHessian(InlsError):
    code = "SINGULAR_HESSIAN"


class Diverged(InlsError):
    code = "DIVERGED"
