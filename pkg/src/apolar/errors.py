"""Shared exception types."""


class GuardExceeded(Exception):
    """A resource guard (basis size, matrix dimension, subset count) was hit.

    Guards exist so that desk-scale commands fail fast instead of grinding;
    every guard has an override parameter or CLI flag.
    """


class InternalInvariantError(AssertionError):
    """An internal consistency check failed; always a bug, never user error."""
