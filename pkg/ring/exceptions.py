"""
Exception hierarchy shared by every twl app.

Management commands translate these into exit codes: configuration, domain
and parse errors are usage errors (exit 1), audit failures exit with 2.
"""


class TwlError(Exception):
    """Base class for all errors raised by the twl apps."""


class ConfigurationError(TwlError):
    """Invalid or mismatched ring specification or run configuration."""


class DomainError(TwlError, ValueError):
    """An operation was applied outside its mathematical domain."""


class ParseError(TwlError):
    """A literal or word could not be parsed."""

    def __init__(self, message: str, position: int = 0, text: str = ''):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class ConsistencyError(TwlError):
    """An internal postcondition failed; the offending instance is attached."""

    def __init__(self, message: str, instance: dict | None = None):
        self.instance = instance or {}
        super().__init__(message)


class UnsupportedQuotientError(TwlError):
    """A quotient certificate is not available for the current ring."""


class IncompatiblePairError(DomainError):
    """A torus action sends a compatible pair to one whose rho and psi images differ."""

    def __init__(self, message: str, instance: dict | None = None):
        self.instance = instance or {}
        super().__init__(message)
