"""Exception hierarchy shared by all toeplitz modules."""


class ToeplitzError(Exception):
    """Base class for all errors raised by this package."""


class EmptyCoding(ToeplitzError):
    """A coding with no tail entries describes no subshift."""


class AllLettersEqual(ToeplitzError):
    """Normalization collapsed the tail to a single letter (periodic word)."""


class HorizonExceeded(ToeplitzError):
    """A generator-backed coding was asked about indices beyond its horizon."""

    def __init__(self, message: str, horizon: int | None = None):
        super().__init__(message)
        self.horizon = horizon


class BudgetExceeded(ToeplitzError):
    """Materializing a word would exceed the configured symbol budget."""


class InvalidShift(ToeplitzError):
    """A shift value r_j lies outside [0, n_j)."""


class WordNotInLanguage(ToeplitzError):
    """The queried word is not a factor of the subshift."""


class OutOfTheoremRange(ToeplitzError):
    """The closed-form repetitivity formula does not cover this length."""


class PrefixTooShort(ToeplitzError):
    """The sampled prefix is too short for a frequency estimate."""
