"""Exception types shared across the package."""


class UnfactorableError(ValueError):
    """An integer resisted factorization within the trial-division bound."""


class DegeneracyError(ValueError):
    """A construction hit a degenerate point configuration.

    Raised when a requested multiple lands on the point at infinity, on a
    pole of a coordinate map, or would produce a zero or repeated tuple
    element.  Callers scanning parameter ranges should treat this as
    "invalid parameters", not as a bug.
    """


class ConsistencyError(RuntimeError):
    """An identity the theory guarantees failed to hold.

    This always indicates a bug or a corrupted fixture, never bad user
    input.
    """
