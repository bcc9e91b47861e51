"""Exception types raised by the epr_dirac library.

All domain errors derive from :class:`EprDiracError`, itself a ``ValueError``,
so callers may catch either the specific class or the common base.
"""


class EprDiracError(ValueError):
    """Base class for all epr_dirac domain errors."""


class OffShellError(EprDiracError):
    """A four-momentum does not satisfy k0 = sqrt(m^2 + |k|^2) within tolerance."""


class UnimodularError(EprDiracError):
    """A 2x2 matrix expected to have unit determinant does not."""


class DirectionError(EprDiracError):
    """A measurement direction is not a unit 3-vector (or cannot be normalized)."""


class NonTransverseError(EprDiracError):
    """A polarization four-vector is not orthogonal to the pair's total momentum."""


class ZeroStateError(EprDiracError):
    """A state kernel (or polarization) vanishes, so no state is defined."""


class EmptyEnsembleError(EprDiracError):
    """An ensemble contains no entries (possibly after masking)."""


class ZeroNormError(EprDiracError):
    """The correlation denominator vanishes on the (masked) ensemble."""


class MomentumMismatchError(EprDiracError):
    """Ensemble entries do not share the required total four-momentum."""


class UndefinedLimitError(EprDiracError):
    """A limiting value is undefined for the given configuration."""


class SingularConfigurationError(EprDiracError):
    """A closed-form denominator vanishes for the given configuration."""
