"""Exception types shared across the package."""


class MomentLabError(Exception):
    """Base class for all library errors."""


class ZeroTau(MomentLabError, ValueError):
    """A tau coefficient is zero, so the recursive matrix degenerates."""


class UnknownName(MomentLabError, KeyError):
    """Requested a catalog entry that does not exist."""


class InsufficientData(MomentLabError, ValueError):
    """The sequence prefix is too short for the requested order."""


class QuasiDefiniteFailure(MomentLabError, ArithmeticError):
    """A Hankel determinant vanished, so no recurrence can be recovered."""

    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"Hankel determinant of order {order} is zero")


class NotPositiveCase(MomentLabError, ValueError):
    """Operation requires all tau coefficients strictly positive."""


class PoleAt(MomentLabError, ZeroDivisionError):
    """The evaluation point coincides with a recurrence coefficient s_n."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"pole: x equals s_{index}")


class LengthMismatch(MomentLabError, ValueError):
    """Parameter list length is incompatible with the value list."""


class HypothesisFailure(MomentLabError, ValueError):
    """The support-interval hypotheses do not hold for this (p,s;q,t)."""

    def __init__(self, failed, message=None):
        self.failed = tuple(failed)
        super().__init__(message or "hypothesis failure: " + ", ".join(self.failed))


class GNegative(MomentLabError, ValueError):
    """The combination polynomial takes negative values on the interval."""


class NonIntegrable(MomentLabError, ValueError):
    """An endpoint exponent is <= -1, so the weight is not integrable."""


class TooShort(MomentLabError, ValueError):
    """Too few indices to decide the subsequence pattern."""
