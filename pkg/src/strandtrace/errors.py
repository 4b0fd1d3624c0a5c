"""Shared exception types."""


class GuardExceededError(Exception):
    """An enumeration would exceed the configured work bound."""


class NonTraceableError(Exception):
    """Tracing this diagram would leave the staircase-like class."""
