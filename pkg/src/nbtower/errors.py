"""Exception hierarchy shared by all nbtower modules."""


class FieldError(Exception):
    """Base class for all library-specific errors."""


class ZeroInverse(FieldError):
    """Inversion of the zero element was requested."""


class CtxMismatch(FieldError):
    """An operation mixed elements of different fields."""


class BadStep(FieldError):
    """A conjugation step does not divide the absolute degree."""


class NotInPrimeField(FieldError):
    """A value expected to be a prime-field scalar is not one."""


class ZeroTrace(FieldError):
    """The absolute trace vanished where a nonzero value is required."""


class Reducible(FieldError):
    """A polynomial required to be irreducible is reducible."""


class EpsilonNotNormal(FieldError):
    """The scaling element does not generate a normal basis."""


class ZeroB(FieldError):
    """The shift constant b must be a nonzero prime-field scalar."""


class NormalityFailure(FieldError):
    """A constructed generator failed a normality or identity check.

    The construction guarantees success, so raising this indicates an
    implementation bug rather than bad input.
    """


class ConstructionFailure(FieldError):
    """A constructed extension failed one of its defining identities."""


class ScaleExceeded(FieldError):
    """A requested computation exceeds the configured desk-scale bound."""


class NoSuchRoot(FieldError):
    """No element of the requested multiplicative order exists."""


class NotDividing(FieldError):
    """The divisibility condition q | p^l - 1 does not hold."""


class BadB(FieldError):
    """The chosen b is zero or collides with the extension constant."""
