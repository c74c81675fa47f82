"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph data or an invalid vertex reference."""


class PreconditionError(ValueError):
    """An operation was called on input outside its domain."""


class ConsistencyError(AssertionError):
    """Two exact computations that must agree did not. Always a bug."""


class EnumerationLimitError(RuntimeError):
    """Raised when an enumeration exceeds its caller-supplied cap.

    ``partial`` holds whatever was produced before the cap was hit, and
    ``size`` the full size when it is known in advance.
    """

    def __init__(self, message, partial=None, size=None):
        super().__init__(message)
        self.partial = partial if partial is not None else []
        self.size = size
