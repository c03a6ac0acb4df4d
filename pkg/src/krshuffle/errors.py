class ConsistencyError(RuntimeError):
    """Two routes that must agree did not.  Always a bug, never bad input."""


class NegativeExponentError(ConsistencyError):
    """A state-sum term would carry a negative power of t; carries the offending data."""

    def __init__(self, sigma, subset, exponent):
        self.sigma = tuple(sigma)
        self.subset = tuple(sorted(subset))
        self.exponent = exponent
        super().__init__(
            f"term for sigma={self.sigma} with a-subset {self.subset} has t-exponent {exponent} < 0"
        )


class InfiniteFamilyError(ValueError):
    """Seq_m(v) was requested for the all-m word, which is infinite."""
