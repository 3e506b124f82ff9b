"""Exception and warning types shared across the package."""


class CsmrError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(CsmrError, ValueError):
    """Input arrays have inconsistent shapes."""


class SingularDesign(CsmrError):
    """Normal equations are rank deficient."""


class InsufficientData(CsmrError, ValueError):
    """Too few rows for the requested operation (e.g. fewer rows than folds)."""


class EmptyComponent(CsmrError):
    """A component's cluster fell below the minimum usable size."""


class DegenerateDensity(CsmrError):
    """A component density cannot be evaluated (non-positive or non-finite variance)."""


class DegenerateComponent(CsmrError):
    """A component's total responsibility is too small to estimate its regression."""


class ConstantResponse(CsmrError, ValueError):
    """The response vector has zero variance."""


class InitFailure(CsmrError):
    """All seeded initialization attempts failed."""


class InvalidSpec(CsmrError, ValueError):
    """A simulation spec violates its invariants."""


class ZeroDenominator(CsmrError, ValueError):
    """A rate has an empty denominator (e.g. no truly nonzero coefficient slots)."""


class DegenerateVariance(CsmrError, ValueError):
    """Correlation requested for a constant vector."""


class DataFormatError(CsmrError, ValueError):
    """A data file failed to parse.

    Carries the 1-based ``line`` number of the offending row when known.
    """

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class NonConvergenceWarning(UserWarning):
    """The coordinate-descent cycle limit was hit; the best iterate is returned."""
