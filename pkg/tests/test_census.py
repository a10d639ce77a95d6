import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from signlattice import Shape, eta, gamma, maximizer, minimizer, sample_random
from signlattice.census import (
    RealMultiset,
    classify_signature,
    count_nonneg_subsets_mitm,
    count_nonneg_subsets_naive,
)


def combinations_count(values):
    """Slowest possible oracle: itertools over index subsets."""
    vals = [F(v) for v in values]
    return sum(1 for k in range(1, len(vals) + 1)
               for c in itertools.combinations(vals, k) if sum(c) >= 0)


def test_examples():
    vals = RealMultiset.parse("1,1,0.9,-0.8,-2.1")
    assert count_nonneg_subsets_naive(vals) == 16 == count_nonneg_subsets_mitm(vals)
    assert classify_signature(vals) == {"n": 5, "r": 3, "in_W": True}
    assert count_nonneg_subsets_naive([-1]) == 0 == count_nonneg_subsets_mitm([-1])
    assert classify_signature([-1])["in_W"] is False
    assert count_nonneg_subsets_mitm([0, 0, 0]) == 7


def test_minimizer_values():
    vals = minimizer(Shape(8, 3)).values
    assert count_nonneg_subsets_mitm(vals) == 128 == gamma(Shape(8, 3))


def test_parse():
    m = RealMultiset.parse(" 1/3, -0.5 ,2 ")
    assert m.values == (F(1, 3), F(-1, 2), F(2))
    assert m.n == 3 and m.r == 2 and m.total == F(11, 6)
    for bad in ("", "1,,2", "1,x", "1/0"):
        with pytest.raises(ValueError):
            RealMultiset.parse(bad)


def test_limits():
    with pytest.raises(ValueError):
        count_nonneg_subsets_naive([1] * 25)
    with pytest.raises(ValueError):
        count_nonneg_subsets_mitm([1] * 49)
    assert count_nonneg_subsets_mitm([1] * 30) == 2 ** 30 - 1


def test_exact_no_epsilon():
    # 0.1 + 0.2 - 0.3 is exactly zero as rationals
    assert count_nonneg_subsets_naive(["0.1", "0.2", "-0.3"]) == count_nonneg_subsets_mitm(["0.1", "0.2", "-0.3"])
    assert combinations_count(["0.1", "0.2", "-0.3"]) == count_nonneg_subsets_naive(["0.1", "0.2", "-0.3"]) == 4


@pytest.mark.parametrize("seed", range(60))
def test_against_combinations(seed):
    rng = random.Random(seed)
    vals = [F(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(rng.randint(1, 11))]
    want = combinations_count(vals)
    assert count_nonneg_subsets_naive(vals) == want
    assert count_nonneg_subsets_mitm(vals) == want


@pytest.mark.parametrize("seed", range(20))
def test_mitm_equals_naive_larger(seed):
    rng = random.Random(1000 + seed)
    vals = [F(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(rng.randint(12, 20))]
    assert count_nonneg_subsets_mitm(vals) == count_nonneg_subsets_naive(vals)


def test_big_values_use_exact_path():
    vals = [10 ** 25, 10 ** 25 + 1, -(2 * 10 ** 25), -1, 3]
    assert count_nonneg_subsets_mitm(vals) == combinations_count(vals)


values = st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=12), min_size=1, max_size=10)


@settings(max_examples=150)
@given(values, st.fractions(min_value=F(1, 100), max_value=100, max_denominator=100))
def test_scale_invariance(vals, c):
    assert count_nonneg_subsets_mitm(vals) == count_nonneg_subsets_mitm([c * v for v in vals])


@settings(max_examples=150)
@given(values, st.randoms(use_true_random=False))
def test_order_invariance(vals, rnd):
    shuffled = list(vals)
    rnd.shuffle(shuffled)
    assert count_nonneg_subsets_mitm(vals) == count_nonneg_subsets_mitm(shuffled)
    assert count_nonneg_subsets_naive(vals) == count_nonneg_subsets_mitm(vals)


@pytest.mark.parametrize("n,r", [(5, 3), (8, 3), (10, 1), (12, 11)])
def test_bounds_on_weight_functions(n, r):
    s = Shape(n, r)
    assert count_nonneg_subsets_mitm(maximizer(s).values) == eta(s)
    for seed in range(100):
        c = count_nonneg_subsets_mitm(sample_random(s, seed).values)
        assert gamma(s) <= c <= eta(s)
