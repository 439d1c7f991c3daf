"""Exception hierarchy shared by every module of the package."""


class MomentsError(Exception):
    """Base class for all errors raised by :mod:`streammoments`."""


class InvalidOrderError(MomentsError, ValueError):
    """A moment order is outside the supported or tracked range."""


class InvalidArgumentError(MomentsError, ValueError):
    pass


class NonFiniteInputError(MomentsError, ValueError):
    """A NaN or infinite value was offered to an accumulator."""


class EmptyAccumulatorError(MomentsError, ValueError):
    """A statistic was requested before any value was absorbed."""


class UndefinedStatisticError(MomentsError, ArithmeticError):
    """The statistic does not exist for this data (e.g. skewness of constant data)."""


class SaturationError(MomentsError, OverflowError):
    """The accumulator state overflowed and no longer holds finite values."""


class IncompatibleAccumulatorError(MomentsError, ValueError):
    """Two accumulators of different order cannot be combined."""


class ParseError(MomentsError, ValueError):
    """An input token could not be read as a finite decimal number."""

    def __init__(self, line: int, token: str, reason: str = "not a finite number"):
        self.line = line
        self.token = token
        super().__init__(f"line {line}: {reason}: {token!r}")
