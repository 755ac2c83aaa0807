"""Exception hierarchy.

Every error carries a short ``code`` string; the CLI reports it verbatim and
maps the two families below onto distinct exit statuses.
"""


class PBIndexError(Exception):
    code = "Error"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail


class ValidationError(PBIndexError, ValueError):
    """Raw data does not describe a valid map."""

    code = "Invalid"


class NotInjective(ValidationError):
    code = "NotInjective"


class NegativeValue(ValidationError):
    code = "NegativeValue"


class HoleExceptionOverlap(ValidationError):
    code = "HoleExceptionOverlap"


class MalformedMap(ValidationError):
    code = "MalformedMap"


class PreconditionError(PBIndexError, ValueError):
    """A valid map fails the hypothesis of a theorem-backed operation."""

    code = "Precondition"


class NonZeroIndex(PreconditionError):
    code = "NonZeroIndex"


class IndexMismatch(PreconditionError):
    code = "IndexMismatch"


class WindowTooSmall(PreconditionError):
    code = "WindowTooSmall"
