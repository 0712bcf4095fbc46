"""Exception hierarchy shared by all toepspec modules."""


class ToepspecError(Exception):
    """Base class for all toepspec errors."""


class EmptyError(ToepspecError):
    """A symbol was constructed with no pieces."""


class OverlapError(ToepspecError):
    """Symbol pieces overlap or leave a gap on the circle."""


class SizeError(ToepspecError):
    """A matrix dimension is out of range."""


class NotAnalyticError(ToepspecError):
    """A coefficient sequence has nonzero negative-index coefficients."""


class GridTooCoarseError(ToepspecError):
    """A quadrature grid is too small for the polynomial degree."""


class TruncationError(ToepspecError):
    """A series cutoff violates its tail bound."""


class TooCloseError(ToepspecError):
    """The query point lies within the distance tolerance of the curve."""


class UnderResolvedError(ToepspecError):
    """A sampled curve turns by >= pi between consecutive samples."""


class DegenerateError(ToepspecError):
    """Arc endpoints coincide."""


class EndpointError(ToepspecError):
    """The query point coincides with an arc endpoint."""


class HasJumpsError(ToepspecError):
    """A continuous-symbol operation received a symbol with jumps."""


class InSpectrumError(ToepspecError):
    """The point lies in the essential spectrum, where no index exists."""


class LengthError(ToepspecError):
    """A grid interval length is out of range."""


class DeltaError(ToepspecError):
    """A small-interval cutoff is out of range."""


class BudgetError(ToepspecError):
    """An experiment parameter exceeds the desk-scale budget."""
