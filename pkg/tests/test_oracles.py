import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import exact_central_sums, rel_close
from streammoments import InvalidArgumentError, MomentAccumulator, twopass_central_moments
from streammoments.oracles import PowerSumAccumulator, naive_central_moments


def test_twopass_examples():
    assert twopass_central_moments([1, 2, 3, 4, 5], 4) == (3.0, [10.0, 0.0, 34.0])
    assert twopass_central_moments([0, 1], 4) == (0.5, [0.5, 0.0, 0.125])
    assert twopass_central_moments([2.5] * 7, 6) == (2.5, [0.0] * 5)
    with pytest.raises(InvalidArgumentError):
        twopass_central_moments([], 3)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=50), st.integers(2, 6))
def test_twopass_against_rational_arithmetic(data, p):
    mean, sums = twopass_central_moments(data, p)
    exact_mean, exact = exact_central_sums(data, p)
    assert rel_close(mean, exact_mean, 4.5e-16, 1e-300)
    u = 2.0 ** -53
    for q, (got, want) in enumerate(zip(sums, exact), start=2):
        # first order: each deviation is off by the mean's rounding plus its own
        # subtraction, and each power adds q - 1 more roundings
        bound = 0.0
        for x in data:
            d, e = abs(x - exact_mean), 3 * u * (abs(x) + abs(exact_mean))
            bound += (d + e) ** q - d ** q + q * u * (d + e) ** q
        assert abs(got - want) <= 1.01 * bound + 1e-300


def test_twopass_is_permutation_stable(rng):
    data = rng.normal(100, 3, 5000)
    _, a = twopass_central_moments(data, 6)
    _, b = twopass_central_moments(rng.permutation(data), 6)
    for x, y in zip(a, b):
        assert rel_close(y, x, 1e-12)


def test_naive_matches_when_well_conditioned(rng):
    data = rng.random(10_000).tolist()
    _, naive = naive_central_moments(data, 4)
    _, truth = twopass_central_moments(data, 4)
    for x, y in zip(naive, truth):
        assert rel_close(x, y, 1e-10)
    _, small = naive_central_moments([1, 2, 3, 4, 5], 4)
    for x, y in zip(small, [10.0, 0.0, 34.0]):
        assert x == pytest.approx(y, rel=1e-12, abs=1e-12)


def test_naive_from_accumulator_and_generic_order(rng):
    data = rng.random(300).tolist()
    ps = PowerSumAccumulator(5)
    for x in data:
        ps.update(x)
    _, from_acc = naive_central_moments(ps)
    _, from_data = naive_central_moments(data, 5)
    assert from_acc == from_data
    _, truth = twopass_central_moments(data, 5)
    for x, y in zip(from_acc[:1], truth[:1]):
        assert rel_close(x, y, 1e-10)
    with pytest.raises(InvalidArgumentError):
        naive_central_moments(PowerSumAccumulator(4))
    with pytest.raises(InvalidArgumentError):
        naive_central_moments([1.0, 2.0])


def test_naive_breaks_on_huge_mean():
    data = [1e9, 1e9 + 1, 1e9 + 2]
    exact_variance = 2 / 3  # deviations -1, 0, +1
    _, naive = naive_central_moments(data, 2)
    stable = MomentAccumulator.from_values(data, 2)
    naive_err = abs(naive[0] / 3 - exact_variance)
    stable_err = abs(stable.variance() - exact_variance)
    assert naive_err > 0.1
    assert naive_err >= 1e3 * stable_err


def test_naive_constant_huge_data_leaves_residue():
    stable = MomentAccumulator.from_values([1e9] * 3, 2)
    assert stable.central_sums == (0.0,)
    for c in (1e9 + 0.1, 987654321.987):
        # the stable path is exactly zero; the naive one is whatever cancellation leaves
        assert MomentAccumulator.from_values([c] * 3, 2).central_sums == (0.0,)
        _, naive = naive_central_moments([c] * 3, 2)
        assert abs(naive[0]) >= 512.0
