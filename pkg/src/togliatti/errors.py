"""Exception hierarchy shared by all modules."""


class TogliattiError(Exception):
    """Base class for every error raised by this package."""


class IdealSyntaxError(TogliattiError, ValueError):
    """Malformed ideal text."""


class DegreeError(TogliattiError, ValueError):
    """A monomial does not have the generation degree."""


class VariableIndexError(TogliattiError, IndexError):
    """A variable index exceeds n."""


class PreconditionError(TogliattiError):
    """A mathematical precondition of an operation does not hold."""


class NotArtinian(PreconditionError):
    pass


class BoundExceeded(PreconditionError):
    """More generators than C(n+d-1, n-1); the WLP/Laplace equivalence does not apply."""


class NotTogliatti(PreconditionError):
    pass


class EmptySet(PreconditionError):
    pass


class LatticeConditionUnmet(PreconditionError):
    pass


class BoundViolation(PreconditionError):
    """Requested generator count lies outside [2n+1, C(n+d-1, n-1)]."""


class UnsupportedParameters(PreconditionError):
    pass


class TooLarge(TogliattiError):
    """The candidate count exceeds the configured ceiling."""
