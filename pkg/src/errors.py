"""
Workbench Errors
Exception hierarchy shared by the exact core, the covariant algebra and the CLI.
"""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for every failure raised by the workbench."""


class NotDivisible(WorkbenchError):
    """Polynomial division left a nonzero remainder."""


class NotDivisibleInBox(WorkbenchError):
    """Series division left a slice remainder or produced a pole inside the box."""


class LeadingSliceNotInvertible(WorkbenchError):
    """The divisor has no invertible corner slice."""


class IdenticalIndices(WorkbenchError):
    """A wedge or Pluecker coordinate was requested for equal indices."""


class OrderTooSmall(WorkbenchError):
    """Transvectant index exceeds the order of one of its arguments."""


class DegreeMismatch(WorkbenchError):
    """Gradings of operands do not agree."""


class TooLarge(WorkbenchError):
    """Parameters beyond the supported enumeration range."""


class NotClosedUnderAction(WorkbenchError):
    """A space handed to the S6 machinery is not stable under index permutations."""


class NonUniformDegree(WorkbenchError):
    """A covariant does not have the same degree in all six linear forms."""


class FractionalResidue(WorkbenchError):
    """A profile evaluation left a non-integral chi5 exponent."""


class OutOfBox(WorkbenchError):
    """A Fourier index lies outside the truncation box."""


class CacheFormatError(WorkbenchError):
    """A series cache file could not be decoded."""


class ExpressionError(WorkbenchError):
    """Syntax, identifier or arity error in a covariant expression."""

    def __init__(self, message: str, position: Optional[int] = None, kind: str = "syntax"):
        self.message = message
        self.position = position
        self.kind = kind
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{kind} error{where}: {message}")

    def highlight(self, source: str) -> str:
        """Render the source with a caret under the offending position."""
        if self.position is None:
            return source
        return f"{source}\n{' ' * self.position}^"
