"""
Ground truth and a bad example.

``twopass_central_moments`` is the reference every streaming result is tested
against: it holds the data in memory and sums deviations with error-free
transformations (``math.fsum``), so its only rounding is in forming each
deviation power.

``PowerSumAccumulator`` is the textbook one-pass method that keeps raw sums
``S_k = sum(x**k)`` and expands them into central sums at the end.  It is
exact in real arithmetic and useless in floating point once the mean is large
compared to the spread.  It lives here only as a baseline and is not exported
from the package namespace.
"""
from __future__ import annotations

import math
from typing import Iterable, Sequence, Union

import numpy as np

from .core import MAX_ORDER, binomial_table
from .errors import InvalidArgumentError, InvalidOrderError


def twopass_central_moments(data: Sequence[float], p: int) -> tuple[float, list[float]]:
    """Return ``(mean, [M_2, ..., M_p])`` by two compensated passes.

    The mean is the correctly rounded sum divided by ``n``, so it is within
    about one ulp of the exact mean.
    """
    if not 2 <= p <= MAX_ORDER:
        raise InvalidOrderError(f"p must be in 2..{MAX_ORDER}, got {p}")
    x = np.asarray(data, dtype=np.float64).ravel()
    n = x.size
    if n == 0:
        raise InvalidArgumentError("twopass_central_moments needs nonempty data")
    mean = math.fsum(x.tolist()) / n
    dev = x - mean
    sums = []
    power = dev.copy()
    for _ in range(2, p + 1):
        power *= dev
        sums.append(math.fsum(power.tolist()))
    return mean, sums


class PowerSumAccumulator:
    """Naive raw power sums ``S_1..S_p``, accumulated without compensation."""

    __slots__ = ("order", "count", "sums")

    def __init__(self, order: int = 4):
        if not 2 <= order <= MAX_ORDER:
            raise InvalidOrderError(f"order must be in 2..{MAX_ORDER}, got {order}")
        self.order = order
        self.count = 0
        self.sums = [0.0] * order  # sums[k-1] == S_k

    def update(self, x: float) -> "PowerSumAccumulator":
        self.extend((x,))
        return self

    def extend(self, values: Iterable[float]) -> None:
        sums = self.sums
        order = self.order
        n = self.count
        if order == 4:
            s1, s2, s3, s4 = sums
            for x in values:
                n += 1
                x2 = x * x
                s1 += x
                s2 += x2
                s3 += x2 * x
                s4 += x2 * x2
            sums[:] = [s1, s2, s3, s4]
        else:
            for x in values:
                n += 1
                xk = 1.0
                for k in range(order):
                    xk *= x
                    sums[k] += xk
        self.count = n


def naive_central_moments(data: Union[Sequence[float], PowerSumAccumulator],
                          p: int | None = None) -> tuple[float, list[float]]:
    """Central sums from raw power sums: ``M_q = sum_k C(q,k) (-mean)**k S_{q-k}``.

    Accepts either raw data (accumulated here in one pass) or a filled
    :class:`PowerSumAccumulator`.  No attempt is made to limit cancellation.
    """
    if isinstance(data, PowerSumAccumulator):
        acc = data
        if p is None:
            p = acc.order
        if not 2 <= p <= acc.order:
            raise InvalidOrderError(f"p must be in 2..{acc.order}, got {p}")
    else:
        if p is None:
            raise InvalidArgumentError("p is required when passing raw data")
        acc = PowerSumAccumulator(p)
        acc.extend(data)
    n = acc.count
    if n == 0:
        raise InvalidArgumentError("naive_central_moments needs nonempty input")
    raw = [float(n)] + acc.sums  # raw[k] == S_k
    mean = raw[1] / n
    coeff = binomial_table(p).as_float
    sums = []
    for q in range(2, p + 1):
        total = 0.0
        neg_mean_pow = 1.0
        for k in range(q + 1):
            total += coeff[q][k] * neg_mean_pow * raw[q - k]
            neg_mean_pow *= -mean
        sums.append(total)
    return mean, sums
