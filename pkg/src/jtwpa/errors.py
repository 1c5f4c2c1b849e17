"""Exception hierarchy shared across the package.

Three user-facing families map onto CLI exit codes: configuration problems
(exit 2), physics-domain rejections of a requested operating point (exit 3),
and unusable input data (exit 4).  ConsistencyError signals an internal
invariant violation and is never caught by the CLI.
"""


class JtwpaError(Exception):
    """Base class for all package errors."""


class ConfigError(JtwpaError):
    """Invalid device file, flag combination, or parameter value."""


class DomainError(JtwpaError):
    """Requested operating point is outside the physically valid domain.

    Carries a short machine-readable ``token`` (e.g. ``plasma-cutoff``,
    ``rpm-stopband``) used verbatim in sweep CSV ``invalid_reason`` cells.
    """

    def __init__(self, token: str, message: str):
        super().__init__(message)
        self.token = token


class DataError(JtwpaError):
    """Measured-data file missing, unreadable, or with no usable rows."""


class ConsistencyError(JtwpaError):
    """An internal physics invariant failed; indicates a bug, not bad input."""
