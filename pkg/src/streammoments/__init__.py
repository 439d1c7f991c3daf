"""
Numerically stable one-pass central moments of arbitrary order.

>>> from streammoments import MomentAccumulator, merge
>>> left = MomentAccumulator.from_values([1.0, 2.0])
>>> right = MomentAccumulator.from_values([3.0, 4.0, 5.0])
>>> merge(left, right).summarize().kurtosis
1.7
"""
from .core import MAX_ORDER, BinomialTable, MomentAccumulator, MomentSummary, binomial_table
from .errors import (
    EmptyAccumulatorError,
    IncompatibleAccumulatorError,
    InvalidArgumentError,
    InvalidOrderError,
    MomentsError,
    NonFiniteInputError,
    ParseError,
    SaturationError,
    UndefinedStatisticError,
)
from .merge import accumulate_chunks, merge, merge_many
from .oracles import twopass_central_moments
from .streamio import ParseConfig, chunk, parse_stream

__all__ = [
    "MAX_ORDER",
    "BinomialTable",
    "EmptyAccumulatorError",
    "IncompatibleAccumulatorError",
    "InvalidArgumentError",
    "InvalidOrderError",
    "MomentAccumulator",
    "MomentSummary",
    "MomentsError",
    "NonFiniteInputError",
    "ParseConfig",
    "ParseError",
    "SaturationError",
    "UndefinedStatisticError",
    "accumulate_chunks",
    "binomial_table",
    "chunk",
    "merge",
    "merge_many",
    "parse_stream",
    "twopass_central_moments",
]
