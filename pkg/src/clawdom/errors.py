"""Exception types shared across the solver."""

from __future__ import annotations


class ClassViolation(ValueError):
    """The input is outside the graph class a routine requires."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class StructureViolation(RuntimeError):
    """A structural fact the case analysis relies on failed to hold.

    On a graph already verified to be in the class this signals a bug (or a
    gap in the argument being implemented); on an unverified input it is a
    rejection.
    """

    def __init__(self, message: str, vertices=()):
        super().__init__(message)
        self.vertices = tuple(vertices)


class LiftError(ValueError):
    """A kernel solution handed to the lift does not dominate its kernel."""
