class InvariantError(AssertionError):
    """A proven identity failed at runtime. Always a bug, never bad input."""
