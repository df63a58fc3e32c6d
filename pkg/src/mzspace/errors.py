"""Exception types shared by all mzspace modules."""


class MzSpaceError(Exception):
    """Base class for all library errors."""


class ZeroInverse(MzSpaceError):
    """Multiplicative inverse of zero was requested."""


class UnsupportedField(MzSpaceError):
    """Operation requires a finite field (or otherwise unsupported field)."""


class MixedFields(MzSpaceError):
    """Operands belong to different fields."""


class ShapeMismatch(MzSpaceError):
    """Matrix shapes are incompatible for the requested operation."""


class ImproperSubspace(MzSpaceError):
    """A proper subspace was required but the full algebra was given."""


class BudgetExceeded(MzSpaceError):
    """An exhaustive scan would exceed the configured element budget."""


class InvalidPart(MzSpaceError):
    """Referenced part does not exist in the grouped frame."""


class HypothesisFailed(MzSpaceError):
    """A structural-certificate hypothesis does not hold.

    Attributes:
        hypothesis: short tag ("sigma", "containment", "pi0-containment",
            "product-vanishing").
        witness: data pinpointing the failure (tuple, basis pair, ...).
    """

    def __init__(self, hypothesis, witness=None, message=None):
        self.hypothesis = hypothesis
        self.witness = witness
        super().__init__(message or f"hypothesis {hypothesis!r} failed: {witness!r}")


class SigmaConditionFailed(MzSpaceError):
    """The integer-tuple sigma condition fails for the given coefficients."""

    def __init__(self, tuple_, message=None):
        self.tuple = tuple_
        super().__init__(message or f"sigma condition fails at tuple {tuple_!r}")


class ProductZero(MzSpaceError):
    """The two chosen block elements multiply to zero."""


class BadBlocks(MzSpaceError):
    """An element does not lie in the required frame block."""


class RankOutOfRange(MzSpaceError):
    """Idempotent rank parameter outside the allowed open interval."""


class DirectionInV(MzSpaceError):
    """The extension direction already lies in the subspace."""


class InternalContractViolation(MzSpaceError):
    """A produced witness failed its own defining identities (library bug)."""


class NotNilpotent(MzSpaceError):
    """Parameter matrix is not nilpotent of order two."""


class ParameterViolation(MzSpaceError):
    """Family parameters violate the documented preconditions."""


class SquareParameter(MzSpaceError):
    """The chosen element is a square in the base field."""


class ExcludedParameter(MzSpaceError):
    """The chosen element is one of the explicitly excluded values."""


class NotAnMS(MzSpaceError):
    """The given subspace is not a Mathieu-Zhao subspace."""


class ConfigError(MzSpaceError):
    """Malformed CLI configuration or input file."""
