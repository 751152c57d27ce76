"""Exception hierarchy shared by every module."""


class CotransversalError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(CotransversalError, ValueError):
    """An argument violates an operation's precondition."""


class SwapNotApplicable(InvalidInputError):
    """``swap(i, j)`` was requested where its preconditions fail."""


class NoTransversalError(InvalidInputError):
    """The set family has no system of distinct representatives.

    ``violator`` holds 0-based indices of sets whose union is smaller than
    their number (a Hall violation).
    """

    def __init__(self, message, violator):
        super().__init__(message)
        self.violator = tuple(violator)


class SizeLimitError(InvalidInputError):
    """A brute-force enumeration would exceed the configured size cap."""


class PartialResultError(CotransversalError):
    """An exploration hit its node limit; ``partial`` carries what was built."""

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


class InvariantViolation(CotransversalError, RuntimeError):
    """A mathematical guarantee failed to hold; indicates a bug."""


class ParseError(InvalidInputError):
    """A document is malformed or describes an invalid object."""
