"""Independent reference helpers shared by the test modules."""
from fractions import Fraction


def exact_central_sums(data, p):
    """Exact (mean, [M_2..M_p]) in rational arithmetic, rounded once at the end."""
    xs = [Fraction(x) for x in data]
    mean = sum(xs) / len(xs)
    return float(mean), [float(sum((x - mean) ** q for x in xs)) for q in range(2, p + 1)]


def rel_close(got, want, rtol=1e-9, atol=1e-12):
    """``|got - want| <= max(rtol * |want|, atol)``; ``want`` is the reference."""
    return abs(got - want) <= max(rtol * abs(want), atol)


def bits(acc):
    """Bitwise fingerprint of an accumulator's state."""
    return (acc.order, acc.count, float(acc.mean).hex(),
            tuple(float(m).hex() for m in acc.central_sums))


def abs_central_sums(data, p):
    """``[sum |x - mean|**q for q in 2..p]``: the scale an odd central sum cancels from."""
    mean = float(sum(Fraction(x) for x in data) / len(data))
    return [sum(abs(x - mean) ** q for x in data) for q in range(2, p + 1)]
