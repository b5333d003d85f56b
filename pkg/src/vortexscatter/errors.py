"""Exception types shared across the package."""


class VortexScatterError(Exception):
    """Base class for all package-specific errors."""


class DomainError(VortexScatterError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class OverflowRangeError(VortexScatterError, ArithmeticError):
    """A cylinder-function value left the representable double range."""


class PreconditionError(VortexScatterError, ValueError):
    """An asymptotic formula was requested outside its validity region."""


class ChannelCapError(VortexScatterError, RuntimeError):
    """Partial-wave construction would exceed the hard channel cap."""
