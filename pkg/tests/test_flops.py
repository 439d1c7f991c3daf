import pytest

from helpers import bits
from streammoments import MomentAccumulator
from streammoments.flops import CountedFloat, OpCounter, count_update_ops

DATA = [0.5, -1.25, 3.0, 2.0, 7.5, -4.0, 1e3, 0.0]


def test_counted_float_tallies_each_kind():
    c = OpCounter()
    x = CountedFloat(2.0, c)
    y = ((x + 1) - 0.5) * 3.0 / x
    z = 1.0 - (2.0 * -x) / 4.0 + 1
    assert (float(y), float(z)) == (3.75, 3.0)
    assert (c.adds, c.subs, c.mults, c.divs, c.negs) == (2, 2, 2, 2, 1)
    assert c.total == 9


@pytest.mark.parametrize("path", ["order4", "generic"])
def test_order4_paths_use_one_division_and_at_most_26_flops(path):
    counter, updates = count_update_ops(DATA, 4, path)
    per = counter.per_update(updates)
    assert counter.divs == updates
    assert per["divs"] == 1
    assert per["flops"] <= 26
    assert counter.negs == 0


def test_counts_do_not_depend_on_data():
    a, _ = count_update_ops([1.0, 2.0, 3.0], 4, "order4")
    b, _ = count_update_ops([-1e6, 0.0, 5e-3], 4, "order4")
    assert a == b


@pytest.mark.parametrize("order", [2, 3, 5, 8])
def test_generic_paths_use_one_division(order):
    counter, updates = count_update_ops(DATA, order, "generic")
    assert counter.divs == updates
    if order < 4:
        four, _ = count_update_ops(DATA, 4, "generic")
        assert counter.total < four.total


def test_counted_run_produces_the_same_numbers():
    counter = OpCounter()
    acc = MomentAccumulator(4)
    acc.mean = CountedFloat(0.0, counter)
    acc._sums = [CountedFloat(0.0, counter) for _ in range(3)]
    plain = MomentAccumulator(4)
    for x in DATA:
        acc.update_order4(x)
        plain.update_order4(x)
    assert float(acc.mean) == plain.mean
    assert [float(m) for m in acc.central_sums] == list(plain.central_sums)


def test_unknown_path():
    with pytest.raises(ValueError):
        count_update_ops(DATA, 4, "fast")
