"""Exception types shared across the package."""


class SizeMismatch(ValueError):
    """Two objects that must have equal size (sum of entries) do not."""


class EmptyInput(ValueError):
    """An operation that needs at least one element received none."""


class ShapeMismatch(ValueError):
    """Row lengths do not form a weakly decreasing shape."""


class LetterOutOfRange(ValueError):
    """A tableau entry exceeds the declared number of letters."""


class ShapeSumMismatch(ValueError):
    """The requested summand shapes do not add up to the tableau shape."""


class LengthExceedsAmbient(ValueError):
    """A partition has more nonzero parts than the ambient dimension."""


class PreconditionViolated(ValueError):
    """An operation's stated hypothesis fails; the message names the condition."""


class SingularMatrix(ValueError):
    """The 3x3 comparison matrix is singular (a coordinate difference is zero)."""


class NoWitness(RuntimeError):
    """A witness guaranteed by theory could not be found; never swallow this."""
