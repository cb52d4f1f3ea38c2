"""Error hierarchy shared by the library, the CLI and the HTTP router.

Every error derives from ValueError so callers that only care about
"bad input" can catch the builtin.
"""

from typing import Optional


class PBBSError(ValueError):
    """Base class for all box-ball errors."""


class DegenerateStateError(PBBSError):
    """State without balls, without empty boxes, or otherwise trivial."""


class InconsistentStateError(PBBSError):
    """Block data that does not describe the requested ring."""


class InvariantError(PBBSError):
    """A conservation or ordering invariant was violated."""


class PrecisionError(PBBSError):
    def __init__(self, message: str, suggested_prec: Optional[int] = None):
        if suggested_prec:
            message = f"{message} (try prec >= {suggested_prec})"
        super().__init__(message)
        self.suggested_prec = suggested_prec


class BoundedSearchError(PBBSError):
    def __init__(self, message: str, cap: int):
        super().__init__(f"{message} (cap {cap})")
        self.cap = cap


class InternalSymmetryError(PBBSError):
    """Closed-form periods are undefined for internally symmetric states."""


class EnumerationBoundError(PBBSError):
    pass


class RangeError(PBBSError):
    pass
