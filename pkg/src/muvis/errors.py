"""Exception types shared across the package."""

from __future__ import annotations


class MuvisError(Exception):
    """Base class for all package-specific errors."""


class NotConnectedError(MuvisError):
    """Raised when an operation that assumes a connected graph receives a
    disconnected one."""


class UnreachablePairError(MuvisError):
    """Raised by the visibility predicate when the two query vertices lie in
    different connected components (no shortest path exists, so the question
    is ill-posed rather than false)."""


class NotDistanceHereditaryError(MuvisError):
    """Raised when a graph fails distance-hereditary recognition.

    ``remainder`` holds the irreducible graph left after pruning stalled.
    """

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class SizeCapError(MuvisError):
    """Raised when an exponential-time oracle is asked to exceed its cap."""


class InvalidSequenceError(MuvisError):
    """Raised when a pruning/expansion sequence is structurally invalid."""


class DecompositionError(MuvisError):
    """Raised when a decomposition-level internal invariant fails; indicates
    a construction bug, not bad user input."""
