"""Exception types shared across the package."""


class HyperspecError(Exception):
    """Base class for all package errors."""


class GuardError(HyperspecError):
    """A desk-scale resource guard was exceeded."""


class InvariantError(HyperspecError):
    """An internal mathematical invariant failed (e.g. a non-integer coefficient)."""


class DomainMismatch(HyperspecError, ValueError):
    """Operands live in different coefficient domains."""


class DegenerateSystem(HyperspecError):
    """The resultant of a polynomial system vanishes identically."""


class InsufficientSamples(HyperspecError):
    """Evaluation-interpolation could not collect enough valid sample points."""


class RepeatedRoots(HyperspecError):
    """A numeric instance has (nearly) repeated roots and must be redrawn."""
