"""Exception types shared across the library.

``DomainError`` marks a violated mathematical precondition (bad partition
type, size mismatch, non-special orbit, ...).  The CLI maps it to exit
code 2 and the HTTP service to a 422 response; plain ``ValueError`` from
argument parsing stays a usage error (exit code 1 / HTTP 400).
"""


class DomainError(ValueError):
    """A precondition of an operation does not hold for the given input."""


class RankBoundExceeded(DomainError):
    """A matrix realization was requested beyond the configured rank bound."""
