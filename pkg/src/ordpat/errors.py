"""Exception hierarchy for ordpat.

All library errors derive from :class:`OrdpatError` so callers can catch one
base class; most also derive from ``ValueError`` because they signal invalid
inputs or degenerate data.
"""


class OrdpatError(Exception):
    """Base class for all ordpat errors."""


class InvalidInput(OrdpatError, ValueError):
    """Input contains non-finite values or has the wrong shape."""


class UnsupportedOrder(OrdpatError, ValueError):
    """Pattern order h outside the supported range [1, HMAX]."""


class InvalidCode(OrdpatError, ValueError):
    """Pattern code out of range for the stated order."""


class OrderMismatch(OrdpatError, ValueError):
    """Pattern codes do not all belong to one order."""


class InsufficientData(OrdpatError, ValueError):
    """Not enough observations for the requested computation."""


class InputMismatch(OrdpatError, ValueError):
    """Paired inputs have incompatible lengths or shapes."""


class DegenerateDenominator(OrdpatError, ValueError):
    """The dependence normalizer 1 - sum(q_x * q_y) is numerically zero.

    Happens when both pattern distributions are (nearly) point masses on the
    same pattern, e.g. two almost surely monotone series of the same kind.
    """


class DegenerateMarginal(OrdpatError, ValueError):
    """A dominance probability is exactly 0 or 1, so the correlation form is undefined."""


class InvalidBandwidth(OrdpatError, ValueError):
    """Long-run variance bandwidth is negative or not smaller than the sample size."""


class SingularCovariance(OrdpatError, ValueError):
    """A window covariance matrix is numerically singular."""


class InvalidCorrelation(OrdpatError, ValueError):
    """Correlation argument outside [-1, 1]."""


class InvalidCovariance(OrdpatError, ValueError):
    """Covariance matrix is not symmetric positive semidefinite."""


class NonStationary(OrdpatError, ValueError):
    """Process parameters violate the stationarity constraint."""


class InvalidConfig(OrdpatError, ValueError):
    """Experiment configuration file is malformed."""
