"""
One-pass accumulation of central moments of arbitrary order.

A :class:`MomentAccumulator` of order ``p`` keeps the count ``n``, the running
mean and the central power sums ``M_q = sum((x_i - mean)**q)`` for
``q = 2..p``.  Each new value ``x`` is absorbed with::

    delta = x - mean
    delta_n = delta / n                      # the only division
    mean += delta_n
    M_q += -sum_{k=1}^{q-2} C(q, k) * delta_n**k * M_{q-k}
           + delta * (delta**(q-1) - delta_n**(q-1))

where the sums are refreshed for ascending ``q`` so that every ``M_{q-k}`` on
the right-hand side already holds its new value.

>>> acc = MomentAccumulator(4)
>>> acc.extend([1, 2, 3, 4, 5])
>>> acc.mean, acc.central_sums
(3.0, (10.0, 0.0, 34.0))
>>> acc.variance(), acc.kurtosis()
(2.0, 1.7)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    EmptyAccumulatorError,
    InvalidOrderError,
    NonFiniteInputError,
    SaturationError,
    UndefinedStatisticError,
)

#: Highest supported order; binomial coefficients stay exact well below 2**53.
MAX_ORDER = 32


class BinomialTable:
    """Pascal's triangle up to ``max_order``, kept as exact integers.

    ``coeff[q][k]`` is ``C(q, k)``.  Rows below 2 are present for indexing
    convenience.  ``as_float`` holds the same rows converted to floats once,
    so the update loop never converts on the hot path.
    """

    __slots__ = ("max_order", "coeff", "as_float", "neg_first")

    def __init__(self, max_order: int):
        if not 2 <= max_order <= MAX_ORDER:
            raise InvalidOrderError(
                f"order must be in 2..{MAX_ORDER}, got {max_order!r}")
        rows = [[1]]
        for q in range(1, max_order + 1):
            prev = rows[-1]
            rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, q)] + [1])
        self.max_order = max_order
        self.coeff = rows
        self.as_float = [[float(c) for c in row] for row in rows]
        # -C(q, 1) = -q opens the correction sum of every order q >= 3
        self.neg_first = [-float(row[1]) if len(row) > 1 else 0.0 for row in rows]

    def __call__(self, q: int, k: int) -> int:
        return self.coeff[q][k]


_TABLES: dict[int, BinomialTable] = {}


def binomial_table(max_order: int) -> BinomialTable:
    """Return a shared, lazily built table for ``max_order``."""
    table = _TABLES.get(max_order)
    if table is None:
        table = _TABLES[max_order] = BinomialTable(max_order)
    return table


def _check_order(order) -> int:
    if isinstance(order, bool) or not isinstance(order, int):
        raise InvalidOrderError(f"order must be an integer, got {order!r}")
    if not 2 <= order <= MAX_ORDER:
        raise InvalidOrderError(f"order must be in 2..{MAX_ORDER}, got {order}")
    return order


@dataclass(frozen=True)
class MomentSummary:
    """Derived statistics of an accumulator.

    Population convention throughout, except ``sample_variance``.  Fields that
    are undefined for the data at hand are ``None``.
    """

    count: int
    mean: float
    variance: float
    sample_variance: Optional[float]
    skewness: Optional[float]
    kurtosis: Optional[float]
    excess_kurtosis: Optional[float]
    central_moments: tuple[float, ...]


class MomentAccumulator:
    """Streaming count, mean and central power sums ``M_2..M_order``.

    The accumulator is a plain mutable value.  It must not be updated from
    several threads at once; combine per-thread accumulators with
    :func:`streammoments.merge.merge` instead.
    """

    __slots__ = ("order", "count", "mean", "_sums", "_table")

    def __init__(self, order: int = 4):
        self.order = _check_order(order)
        self.count = 0
        self.mean = 0.0
        self._sums = [0.0] * (order - 1)
        self._table = binomial_table(order)

    @classmethod
    def from_values(cls, values: Iterable[float], order: int = 4) -> "MomentAccumulator":
        acc = cls(order)
        acc.extend(values)
        return acc

    @classmethod
    def from_state(cls, order: int, count: int, mean: float,
                   central_sums: Sequence[float]) -> "MomentAccumulator":
        """Rebuild an accumulator from its flat record (see :meth:`to_dict`)."""
        acc = cls(order)
        if len(central_sums) != order - 1:
            raise InvalidOrderError(
                f"order {order} needs {order - 1} central sums, "
                f"got {len(central_sums)}")
        if count < 0:
            raise ValueError("count must be nonnegative")
        acc.count = int(count)
        acc.mean = float(mean)
        acc._sums = [float(m) for m in central_sums]
        return acc

    @property
    def central_sums(self) -> tuple[float, ...]:
        """``(M_2, ..., M_order)``."""
        return tuple(self._sums)

    def central_sum(self, q: int) -> float:
        if not 2 <= q <= self.order:
            raise InvalidOrderError(f"q must be in 2..{self.order}, got {q}")
        return self._sums[q - 2]

    def copy(self) -> "MomentAccumulator":
        other = MomentAccumulator.__new__(MomentAccumulator)
        other.order = self.order
        other.count = self.count
        other.mean = self.mean
        other._sums = list(self._sums)
        other._table = self._table
        return other

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "count": self.count,
            "mean": self.mean,
            "central_sums": list(self._sums),
        }

    def __eq__(self, other):
        if not isinstance(other, MomentAccumulator):
            return NotImplemented
        return (self.order == other.order and self.count == other.count
                and self.mean == other.mean and self._sums == other._sums)

    __hash__ = None

    def __repr__(self) -> str:
        return (f"MomentAccumulator(order={self.order}, count={self.count}, "
                f"mean={self.mean!r}, central_sums={self.central_sums!r})")

    # -- updates -----------------------------------------------------------

    def update(self, x: float) -> "MomentAccumulator":
        """Absorb one finite value using the order-generic rule.

        Raises :class:`NonFiniteInputError` and leaves the state untouched if
        ``x`` is NaN or infinite.
        """
        self._absorb((x,))
        return self

    def update_order4(self, x: float) -> "MomentAccumulator":
        """Unrolled order-4 update; bit-for-bit the same result as :meth:`update`."""
        if self.order != 4:
            raise InvalidOrderError(
                f"update_order4 needs an order-4 accumulator, got order {self.order}")
        self._absorb4((x,))
        return self

    def extend(self, values: Iterable[float]) -> None:
        """Absorb ``values`` in order.

        On a non-finite value, every value before it stays absorbed and the
        error is raised.  Order-4 accumulators take the unrolled path, which
        yields bit-identical state to repeated :meth:`update` calls.
        """
        if self.order == 4:
            self._absorb4(values)
        else:
            self._absorb(values)

    def _absorb(self, values: Iterable[float]) -> None:
        sums = self._sums
        order = self.order
        coef = self._table.as_float
        neg_first = self._table.neg_first
        isfinite = math.isfinite
        n = self.count
        mean = self.mean
        try:
            for x in values:
                if not isfinite(x):
                    raise NonFiniteInputError(f"cannot absorb non-finite value {x!r}")
                n += 1
                delta = x - mean
                delta_n = delta / n
                mean += delta_n
                sums[0] += delta * (delta - delta_n)
                if order == 2:
                    continue
                d_pow = delta        # delta**(q-1)
                dn_pow = delta_n     # delta_n**(q-1)
                dn_pows = [1.0, delta_n]
                for q in range(3, order + 1):
                    d_pow = d_pow * delta
                    dn_pow = dn_pow * delta_n
                    dn_pows.append(dn_pow)
                    row = coef[q]
                    corr = neg_first[q] * delta_n * sums[q - 3]
                    for k in range(2, q - 1):
                        corr = corr - row[k] * dn_pows[k] * sums[q - k - 2]
                    sums[q - 2] += corr + delta * (d_pow - dn_pow)
        finally:
            self.count = n
            self.mean = mean

    def _absorb4(self, values: Iterable[float]) -> None:
        sums = self._sums
        isfinite = math.isfinite
        n = self.count
        mean = self.mean
        m2, m3, m4 = sums
        try:
            for x in values:
                if not isfinite(x):
                    raise NonFiniteInputError(f"cannot absorb non-finite value {x!r}")
                n += 1
                delta = x - mean
                delta_n = delta / n
                mean += delta_n
                m2 += delta * (delta - delta_n)
                delta_2 = delta * delta
                delta_n_2 = delta_n * delta_n
                m3 += -3.0 * delta_n * m2 + delta * (delta_2 - delta_n_2)
                m4 += -4.0 * delta_n * m3 - 6.0 * delta_n_2 * m2 \
                    + delta * (delta * delta_2 - delta_n * delta_n_2)
        finally:
            self.count = n
            self.mean = mean
            sums[0], sums[1], sums[2] = m2, m3, m4

    # -- queries -----------------------------------------------------------

    def is_saturated(self) -> bool:
        """True once any field has overflowed to a non-finite value."""
        return not (math.isfinite(self.mean) and all(map(math.isfinite, self._sums)))

    def _require_data(self) -> None:
        if self.count == 0:
            raise EmptyAccumulatorError("no values have been absorbed")
        if self.is_saturated():
            raise SaturationError(
                "accumulator state overflowed; moments of this order are not "
                "representable for this data")

    def _require_order(self, q: int, what: str) -> None:
        if self.order < q:
            raise InvalidOrderError(
                f"{what} needs an accumulator of order >= {q}, got {self.order}")

    def central_moment(self, q: int) -> float:
        """``M_q / n``, the ``q``-th central moment."""
        if not 2 <= q <= self.order:
            raise InvalidOrderError(f"q must be in 2..{self.order}, got {q}")
        self._require_data()
        return self._sums[q - 2] / self.count

    def variance(self) -> float:
        """Population variance ``M_2 / n``."""
        self._require_data()
        return self._sums[0] / self.count

    def sample_variance(self) -> float:
        self._require_data()
        if self.count < 2:
            raise UndefinedStatisticError("sample variance needs at least two values")
        return self._sums[0] / (self.count - 1)

    def skewness(self) -> float:
        """``sqrt(n) * M_3 / M_2**1.5``."""
        self._require_data()
        self._require_order(3, "skewness")
        m2 = self._sums[0]
        if m2 <= 0.0:
            raise UndefinedStatisticError("skewness is undefined for constant data")
        return math.sqrt(self.count) * self._sums[1] / m2 ** 1.5

    def kurtosis(self) -> float:
        """``n * M_4 / M_2**2`` (not excess; a normal sample gives about 3)."""
        self._require_data()
        self._require_order(4, "kurtosis")
        m2 = self._sums[0]
        if m2 <= 0.0:
            raise UndefinedStatisticError("kurtosis is undefined for constant data")
        return self.count * self._sums[2] / (m2 * m2)

    def summarize(self) -> MomentSummary:
        """Bundle every statistic; undefined ones come back as ``None``."""
        self._require_data()
        n = self.count

        def optional(stat):
            try:
                return stat()
            except (UndefinedStatisticError, InvalidOrderError):
                return None

        kurt = optional(self.kurtosis)
        return MomentSummary(
            count=n,
            mean=self.mean,
            variance=self.variance(),
            sample_variance=optional(self.sample_variance),
            skewness=optional(self.skewness),
            kurtosis=kurt,
            excess_kurtosis=None if kurt is None else kurt - 3.0,
            central_moments=tuple(m / n for m in self._sums),
        )
