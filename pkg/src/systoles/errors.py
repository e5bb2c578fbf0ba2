"""Exception types raised across the package."""


class SystoleError(Exception):
    """Base class for all errors raised by :mod:`systoles`."""


class DomainError(SystoleError, ValueError):
    """An input lies outside the domain of the operation."""


class RelationViolation(SystoleError, ArithmeticError):
    """A defining relation of the representation failed to hold.

    This signals a bug in the matrix construction, never bad input.
    """


class IllegalLetter(SystoleError, ValueError):
    """A group word uses a letter that does not exist for the surface."""


class UnsupportedGenerator(SystoleError, ValueError):
    pass


class UnsupportedSurface(SystoleError, ValueError):
    pass


class NonTermination(SystoleError, RuntimeError):
    """A walk that provably terminates exceeded its step guard."""


class ToleranceAmbiguity(SystoleError, ArithmeticError):
    """Floating point cannot decide a tie; retry with exact rationals."""


class DepthExceeded(SystoleError, ValueError):
    pass


class InvariantViolation(SystoleError, AssertionError):
    """An executable invariant (monotone frontier, Markoff identity) failed."""
