class ValidationError(ValueError):
    """Raised when an input violates a structural invariant (non-prime, loop, bad subset...)."""
