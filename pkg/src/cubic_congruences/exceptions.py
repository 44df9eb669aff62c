"""Exception types raised across the package."""


class RingMismatchError(ValueError):
    """Two series with different coefficient rings were combined."""


class NotAUnitError(ValueError):
    """A constant term that has no inverse in its ring was inverted."""

    def __init__(self, value, ring):
        self.value = value
        self.ring = ring
        super().__init__(f"constant term {value} is not a unit in {ring}")


class TruncationError(IndexError):
    """A coefficient beyond the truncation order was requested."""


class HypothesisError(ValueError):
    """A prime or parameter does not satisfy a theorem's hypotheses."""


class ResourceLimitError(RuntimeError):
    """The requested expansion order exceeds the configured ceiling."""


class OracleMismatchError(AssertionError):
    """The modular series path disagrees with the combinatorial oracle."""
