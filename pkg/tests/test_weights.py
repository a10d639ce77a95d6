from fractions import Fraction as F

import numpy as np
import pytest

from signlattice import (
    Region,
    Shape,
    ShapeError,
    WeightFunction,
    alpha,
    check_bm_axioms,
    classify,
    enumerate_strings,
    eta,
    gamma,
    induced_map,
    maximizer,
    minimizer,
    parse_string,
    positive_count,
    sample_random,
    search_realizing,
    sigma,
    validate,
)
from signlattice.census import count_nonneg_subsets_naive

from oracles import leq_matrix, shapes

# the (5,3) example: f(3~)=1, f(2~)=1, f(1~)=0.9, f(1-)=-0.8, f(2-)=-2.1
EX53 = WeightFunction.from_row(["1", "1", "0.9"], ["-0.8", "-2.1"])


def test_row_order():
    assert EX53.pos_values == (F(9, 10), F(1), F(1))
    assert EX53.neg_values == (F(-4, 5), F(-21, 10))
    assert EX53.shape == Shape(5, 3)
    assert str(EX53) == "1,1,9/10 | -4/5,-21/10"
    assert WeightFunction.from_json(EX53.to_json()) == EX53


def test_json_shape_mismatch():
    with pytest.raises(ShapeError):
        WeightFunction.from_json({"n": 4, "r": 2, "pos": ["1"], "neg": ["-1"]})
    with pytest.raises(ShapeError):
        WeightFunction(Shape(3, 2), (1,), (-1,))


def test_validate():
    assert validate(EX53) == []
    assert any("total" in v for v in validate(WeightFunction.from_row([1, 1], [-3])))
    bad = validate(WeightFunction.from_row([1, 2], [-1]))  # f(2~)=1 < f(1~)=2
    assert bad and "f(2~)" in bad[0]
    assert validate(WeightFunction.from_row([1], [0]))
    assert validate(WeightFunction.from_row([1, 1], [-1, 0]))
    assert validate(WeightFunction.from_row([5, 5], [-2, -1]))


def test_sigma_examples():
    s = EX53.shape
    assert sigma(EX53, parse_string(s, "321|12")) == 0
    assert sigma(EX53, parse_string(s, "210|02")) == F(-1, 5)
    for w in enumerate_strings(s):
        if not w.pos and not w.neg:
            assert sigma(EX53, w) == 0


def test_sigma_shape_mismatch():
    with pytest.raises(ShapeError):
        sigma(EX53, parse_string(Shape(3, 2), "00|0"))


def test_induced_map_example():
    A = induced_map(EX53)
    assert positive_count(A) == 16 == alpha(EX53)
    assert not A(parse_string(EX53.shape, "000|00"))
    assert A(parse_string(EX53.shape, "321|12"))


@pytest.mark.parametrize("seed", range(30))
def test_sum_table_matches_sigma(seed):
    shape = shapes(7, n_min=2)[seed % len(shapes(7, n_min=2))]
    wf = sample_random(shape, seed)
    A = induced_map(wf)
    for w in enumerate_strings(shape):
        want = sigma(wf, w) >= 0 and (w.pos or w.neg)
        assert A(w) == bool(want)


@pytest.mark.parametrize("shape", shapes(7, n_min=2))
def test_monotonicity(shape):
    els, le = leq_matrix(shape)
    for seed in range(3):
        wf = sample_random(shape, seed)
        sig = np.array([sigma(wf, w) for w in els], dtype=object)
        i, j = np.nonzero(le)
        assert all(sig[a] <= sig[b] for a, b in zip(i, j))


@pytest.mark.parametrize("shape", shapes(8, n_min=2))
def test_induced_maps_satisfy_axioms(shape):
    for seed in range(12):
        A = induced_map(sample_random(shape, seed))
        rep = check_bm_axioms(A)
        assert rep.ok, rep.violations


def test_minimizer_examples():
    wf = minimizer(Shape(6, 2))
    assert wf.row() == ((4, 4), (-1, -1, -1, -5))
    assert alpha(wf) == 32
    small = minimizer(Shape(2, 1))
    assert small.row() == ((1,), (-1,))
    assert alpha(small) == 2


@pytest.mark.parametrize("shape", shapes(12, n_min=2, strict=True))
def test_extremal_functions(shape):
    f, g = minimizer(shape), maximizer(shape)
    assert validate(f) == [] and validate(g) == []
    assert sum(f.values) == 0
    assert alpha(f) == gamma(shape) == 2 ** (shape.n - 1)
    assert alpha(g) == eta(shape) == 2 ** shape.n - 2 ** shape.m


def test_maximizer_examples():
    assert alpha(maximizer(Shape(6, 2))) == 48
    g = maximizer(Shape(2, 1))
    assert g.row() == ((1,), (-1,)) and alpha(g) == 2


@pytest.mark.parametrize("shape", shapes(10, n_min=2, strict=True))
def test_maximizer_positive_on_middle_regions(shape):
    A = induced_map(maximizer(shape))
    for w in enumerate_strings(shape):
        if classify(w) in (Region.S1_PM, Region.S2_PM):
            assert A(w)


@pytest.mark.parametrize("shape", shapes(10, n_min=2, strict=True))
def test_minimizer_splits_middle_regions(shape):
    A = induced_map(minimizer(shape))
    for w in enumerate_strings(shape):
        reg = classify(w)
        if reg in (Region.S2_PM, Region.S1_PLUS, Region.S2_PLUS):
            assert A(w)
        else:
            assert not A(w)


def test_extremes_reject_r_equal_n():
    with pytest.raises(ShapeError):
        minimizer(Shape(3, 3))
    with pytest.raises(ShapeError):
        maximizer(Shape(3, 3))


def test_all_nonnegative_shape():
    for n in range(1, 8):
        wf = WeightFunction(Shape(n, n), tuple(range(n)), ())
        assert validate(wf) == []
        assert alpha(wf) == 2 ** n - 1


def test_sample_random_deterministic():
    s = Shape(8, 3)
    assert sample_random(s, 42) == sample_random(s, 42)
    assert sample_random(s, 1) != sample_random(s, 2)


def test_sample_random_valid_and_bounded():
    s = Shape(8, 3)
    seen = set()
    for seed in range(1000):
        wf = sample_random(s, seed)
        assert validate(wf) == []
        a = alpha(wf)
        assert 128 <= a <= 224
        seen.add(a)
    # the sampler should reach a decent spread of counts
    assert len(seen) > 20


def test_search_realizing_extremes():
    s = Shape(6, 2)
    assert search_realizing(s, 32) == minimizer(s)
    assert search_realizing(s, 48) == maximizer(s)
    with pytest.raises(ValueError):
        search_realizing(s, 49)


def test_search_realizing_42():
    # outcome for (4,2), q=10 within a budget of 2000 evaluations
    wf = search_realizing(Shape(4, 2), 10, budget=2000, seed=0)
    assert wf is not None
    assert validate(wf) == [] and alpha(wf) == 10
    assert count_nonneg_subsets_naive(wf.values) == 10


def test_object_dtype_fallback():
    big = 10 ** 30
    wf = WeightFunction.from_row([big, big, big], [-big, -2 * big])
    assert alpha(wf) == count_nonneg_subsets_naive(wf.values)
