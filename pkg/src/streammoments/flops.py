"""
Operation counting for the update paths.

:class:`CountedFloat` wraps a float and records every add, subtract, multiply,
divide and negation it takes part in on a shared :class:`OpCounter`.  Seeding
an accumulator's state with counted floats makes the ordinary update code
report its own arithmetic; nothing in the release path is aware of it.

Counting rules: each binary ``+ - * /`` is one operation, unary minus is one
operation, integer bookkeeping (the count) is not a floating-point operation,
and there are no fused operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import MomentAccumulator


@dataclass
class OpCounter:
    adds: int = 0
    subs: int = 0
    mults: int = 0
    divs: int = 0
    negs: int = 0

    @property
    def total(self) -> int:
        return self.adds + self.subs + self.mults + self.divs + self.negs

    def per_update(self, updates: int) -> dict[str, float]:
        return {
            "adds": self.adds / updates,
            "subs": self.subs / updates,
            "mults": self.mults / updates,
            "divs": self.divs / updates,
            "negs": self.negs / updates,
            "flops": self.total / updates,
        }


def _value(v):
    return v.value if isinstance(v, CountedFloat) else v


class CountedFloat:
    __slots__ = ("value", "counter")

    def __init__(self, value: float, counter: OpCounter):
        self.value = float(value)
        self.counter = counter

    def _new(self, value):
        return CountedFloat(value, self.counter)

    def __add__(self, other):
        self.counter.adds += 1
        return self._new(self.value + _value(other))

    def __radd__(self, other):
        self.counter.adds += 1
        return self._new(_value(other) + self.value)

    def __sub__(self, other):
        self.counter.subs += 1
        return self._new(self.value - _value(other))

    def __rsub__(self, other):
        self.counter.subs += 1
        return self._new(_value(other) - self.value)

    def __mul__(self, other):
        self.counter.mults += 1
        return self._new(self.value * _value(other))

    def __rmul__(self, other):
        self.counter.mults += 1
        return self._new(_value(other) * self.value)

    def __truediv__(self, other):
        self.counter.divs += 1
        return self._new(self.value / _value(other))

    def __rtruediv__(self, other):
        self.counter.divs += 1
        return self._new(_value(other) / self.value)

    def __neg__(self):
        self.counter.negs += 1
        return self._new(-self.value)

    def __float__(self):
        return self.value

    def __repr__(self):
        return f"CountedFloat({self.value!r})"


def count_update_ops(values: Iterable[float], order: int = 4,
                     path: str = "generic") -> tuple[OpCounter, int]:
    """Run ``values`` through one update path with counted arithmetic.

    ``path`` is ``"generic"`` (:meth:`MomentAccumulator.update`) or
    ``"order4"`` (:meth:`MomentAccumulator.update_order4`).  Returns the
    counter and the number of updates performed.
    """
    counter = OpCounter()
    acc = MomentAccumulator(order)
    acc.mean = CountedFloat(0.0, counter)
    acc._sums = [CountedFloat(0.0, counter) for _ in acc._sums]
    if path == "generic":
        step = acc.update
    elif path == "order4":
        step = acc.update_order4
    else:
        raise ValueError(f"unknown update path {path!r}")
    updates = 0
    for x in values:
        step(float(x))
        updates += 1
    return counter, updates
