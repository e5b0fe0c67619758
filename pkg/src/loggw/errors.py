"""Exception hierarchy shared by every module."""


class LogGWError(Exception):
    """Base class for all errors raised by loggw."""


class DomainError(LogGWError, ValueError):
    """An argument lies outside the domain of the operation."""


class DimensionError(LogGWError, ValueError):
    pass


class InvalidClassError(LogGWError, ValueError):
    pass


class ProfileError(LogGWError, ValueError):
    pass


class ConfigurationError(LogGWError, ValueError):
    """Malformed or unsupported input configuration."""


class MalformedCurveError(LogGWError, ValueError):
    pass


class HigherValencyError(LogGWError):
    """A vertex of valency other than three was asked for a multiplicity."""


class DegenerateConfiguration(LogGWError):
    """Conditions are not generic: a solution family is positive dimensional
    or a solution has a higher-valent vertex. Perturb and retry."""


class IncompleteSeriesError(LogGWError, KeyError):
    pass


class UnknownSingularityError(LogGWError, KeyError):
    pass


class MissingInvariantError(LogGWError, KeyError):
    pass


class UnderdeterminedError(LogGWError):
    pass


class LedgerMismatchError(LogGWError):
    pass


class LedgerArityError(LogGWError):
    pass
