"""
Combining accumulators built over separate pieces of a stream.

With ``n = n_a + n_b`` and ``delta = mean_b - mean_a``, the points of ``a``
sit ``-delta * n_b / n`` and those of ``b`` sit ``+delta * n_a / n`` away from
the combined mean.  Expanding each side's power sums around the combined mean
gives, with ``M_0 = count`` and ``M_1 = 0``::

    M_q = sum_{k=0}^{q} C(q, k) * (  (-delta * n_b / n)**k * Ma_{q-k}
                                   + ( delta * n_a / n)**k * Mb_{q-k})
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from .core import MomentAccumulator, binomial_table
from .errors import IncompatibleAccumulatorError, InvalidArgumentError


def merge(a: MomentAccumulator, b: MomentAccumulator) -> MomentAccumulator:
    """Return the accumulator of ``a``'s stream followed by ``b``'s stream.

    Neither input is modified.  An empty operand is an exact identity.
    """
    if a.order != b.order:
        raise IncompatibleAccumulatorError(
            f"cannot merge accumulators of order {a.order} and {b.order}")
    if b.count == 0:
        return a.copy()
    if a.count == 0:
        return b.copy()

    order = a.order
    coeff = binomial_table(order).as_float
    na, nb = a.count, b.count
    n = na + nb
    delta = b.mean - a.mean
    shift_a = -delta * (nb / n)
    shift_b = delta * (na / n)

    # index q holds M_q; M_0 is the count and M_1 vanishes about each own mean
    ma = [float(na), 0.0] + list(a.central_sums)
    mb = [float(nb), 0.0] + list(b.central_sums)

    sums = []
    for q in range(2, order + 1):
        row = coeff[q]
        total = ma[q] + mb[q]
        pa = pb = 1.0
        for k in range(1, q + 1):
            pa *= shift_a
            pb *= shift_b
            if k == q - 1:
                continue
            total += row[k] * (pa * ma[q - k] + pb * mb[q - k])
        sums.append(total)

    out = MomentAccumulator(order)
    out.count = n
    out.mean = a.mean - shift_a
    out._sums = sums
    return out


def merge_many(parts: Sequence[MomentAccumulator]) -> MomentAccumulator:
    """Strict left fold of :func:`merge` over ``parts``."""
    parts = list(parts)
    if not parts:
        raise InvalidArgumentError("merge_many needs at least one accumulator")
    result = parts[0].copy()
    for part in parts[1:]:
        result = merge(result, part)
    return result


def _accumulate(values: Sequence[float], order: int) -> MomentAccumulator:
    return MomentAccumulator.from_values(values, order)


def accumulate_chunks(chunks: Iterable[Sequence[float]], order: int = 4,
                      jobs: int = 1) -> MomentAccumulator:
    """Accumulate each chunk independently, then fold the results in chunk order.

    With ``jobs > 1`` the chunks are processed in worker processes.  The fold
    order does not depend on ``jobs``, so the result is identical either way.
    """
    chunks = list(chunks)
    if not chunks:
        return MomentAccumulator(order)
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(chunks))) as pool:
            parts = list(pool.map(_accumulate, chunks, [order] * len(chunks)))
    else:
        parts = [_accumulate(c, order) for c in chunks]
    return merge_many(parts)
