"""Exceptions shared across the solver modules."""


class CycleError(Exception):
    """Raised when a digraph expected to be acyclic contains a cycle."""


class NoPathError(Exception):
    """Raised when no s-t path exists where one is required."""


class CapExceeded(Exception):
    """Raised when an enumeration produces more paths than the caller's cap.

    ``count`` is the number of paths materialized when the cap was hit;
    the true total is at least this.
    """

    def __init__(self, count: int):
        super().__init__(f"path cap exceeded: {count} paths materialized")
        self.count = count
