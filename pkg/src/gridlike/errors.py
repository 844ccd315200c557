"""Exception types shared across the package.

The split matters for callers: input problems (GraphError, FormatError)
mean the data was bad, PreconditionError means a stated hypothesis of an
operation was violated, TransversalExhaustedError is retryable with a new
seed, and LemmaViolationError flags an internal contradiction that should
be impossible on valid inputs.
"""


class GridlikeError(Exception):
    """Base class for all package-specific errors."""


class GraphError(GridlikeError, ValueError):
    """Structurally invalid graph data (range, loops, duplicates, bad paths)."""


class FormatError(GridlikeError, ValueError):
    """Malformed serialized input (edge lists, DIMACS, JSON certificates)."""


class PreconditionError(GridlikeError):
    """A documented hypothesis of an operation does not hold for the input."""


class InsufficientOrderError(PreconditionError):
    """A bramble ran out of order before all segments could be placed."""

    def __init__(self, message, placed=0):
        super().__init__(message)
        self.placed = placed


class SizeLimitError(GridlikeError):
    """Input exceeds the size gate of an exact exponential computation."""


class FallbackFailedError(GridlikeError):
    """Greedy minor extraction and its exact fallback both came up empty."""


class TransversalExhaustedError(GridlikeError):
    """Resampling hit its round limit; retry with a different seed."""

    def __init__(self, message, rounds=0):
        super().__init__(message)
        self.rounds = rounds


class LemmaViolationError(GridlikeError):
    """An outcome the theory rules out happened; carries the witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
