"""Exception types shared across the package."""


class FoldexError(Exception):
    """Base class for all foldex errors."""


class DegenerateInput(FoldexError):
    """Input polyline collapses to fewer than two distinct vertices."""


class OutOfRange(FoldexError):
    """Arc-length parameter or interval outside the polyline's domain."""


class BadParam(FoldexError):
    """Detection parameter outside its valid range."""
