"""Exception hierarchy shared across the package."""


class SarlabError(Exception):
    """Base class for all package errors."""


class ParameterError(SarlabError, ValueError):
    """An argument is outside its documented domain."""


class ValidationError(SarlabError, ValueError):
    """Input data violates a structural contract (bad character, length mismatch, ...)."""


class SizeError(SarlabError, ValueError):
    """A request exceeds an enumeration / memory guard."""


class FitError(SarlabError, RuntimeError):
    """Curve fitting has too few usable points or is otherwise degenerate."""


class NumericError(SarlabError, RuntimeError):
    """A numerical routine failed to bracket or converge."""


class ConfigError(SarlabError, ValueError):
    """A run configuration is missing or malformed."""
