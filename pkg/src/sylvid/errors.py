"""Exception hierarchy shared by every module of the package."""


class SylvidError(Exception):
    """Base class for all errors raised by sylvid."""


class ShapeError(SylvidError, ValueError):
    """Matrix or index-list dimensions are incompatible with the operation."""


class BoundsError(SylvidError, IndexError):
    """An index lies outside the matrix."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class DomainError(SylvidError, ValueError):
    """A parameter lies outside the domain where the operation is defined."""


class CapacityError(SylvidError):
    """The request exceeds a configured size cap."""


class ConfigurationError(SylvidError, ValueError):
    """Index lists or stage parameters violate an identity's hypotheses."""


class PivotError(SylvidError, ArithmeticError):
    """A zero pivot was met; ``order`` is the order of the vanishing leading minor."""

    def __init__(self, message, order, trace=None):
        super().__init__(message)
        self.order = order
        self.trace = trace


class CertificationError(SylvidError):
    """An elimination intermediate disagrees with its bordered minor."""

    def __init__(self, message, stage, row, col):
        super().__init__(message)
        self.stage = stage
        self.row = row
        self.col = col


class MatrixFormatError(SylvidError, ValueError):
    """Malformed matrix text."""
