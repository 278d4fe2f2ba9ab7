"""Exception types raised across the package."""


class WeylcubError(Exception):
    """Base class."""


class UnsupportedAlgebra(WeylcubError, ValueError):
    pass


class InvalidM(WeylcubError, ValueError):
    pass


class InexactPoint(WeylcubError, TypeError):
    pass


class NonDominantLabel(WeylcubError, ValueError):
    pass


class NonStrictlyDominantLabel(WeylcubError, ValueError):
    pass


class StepOutOfRange(WeylcubError, ValueError):
    pass


class ConsistencyError(WeylcubError, RuntimeError):
    """An internal identity that must hold exactly (up to roundoff) failed."""
