import pytest

from signlattice import (
    Region,
    Shape,
    ShapeError,
    check_lemma_properties,
    classify,
    complement,
    enumerate_strings,
    leq,
    make_string,
    parse_string,
    region_size,
    special,
    upset,
)
from signlattice.regions import region_mask

from oracles import shapes


def to_smaller(w):
    """Order-isomorphism of S1 (resp. S2) onto S(n-1, r): drop the last negative slot."""
    s = w.shape
    small = Shape(s.n - 1, s.r)
    return make_string(small, w.pos_set, w.neg_set - {s.m})


def test_classify_examples():
    s = Shape(6, 2)
    assert classify(parse_string(s, "21|0123")) is Region.S2_PLUS
    assert classify(special(s, "theta")) is Region.S2_MINUS
    assert classify(special(s, "Theta")) is Region.S1_PLUS
    with pytest.raises(ShapeError):
        classify(make_string(Shape(3, 3)))


def test_special_elements():
    assert str(special(Shape(3, 2), "alpha")) == "10|0"
    assert str(special(Shape(6, 2), "t1")) == "20|0004"
    assert str(special(Shape(5, 3), "theta")) == "000|00"
    assert str(special(Shape(6, 2), "Theta")) == "21|1234"
    assert str(special(Shape(6, 2), "b1")) == "10|1234"
    assert str(special(Shape(6, 2), "alpha")) == "10|0123"
    with pytest.raises(ValueError):
        special(Shape(6, 2), "omega")
    with pytest.raises(ShapeError):
        special(Shape(4, 4), "theta")


@pytest.mark.parametrize("shape", shapes(8, n_min=2, strict=True))
def test_special_extremes_of_their_regions(shape):
    pm1 = [w for w in enumerate_strings(shape) if classify(w) is Region.S1_PM]
    pm2 = [w for w in enumerate_strings(shape) if classify(w) is Region.S2_PM]
    if shape.r == 1:
        assert pm1 == pm2 == []
        return
    b1, t1, a = special(shape, "b1"), special(shape, "t1"), special(shape, "alpha")
    assert all(leq(b1, w) and leq(w, t1) for w in pm1)
    assert all(leq(a, w) for w in pm2)
    assert complement(t1) == a


def test_region_sizes_62():
    s = Shape(6, 2)
    counts = {reg: 0 for reg in Region}
    for w in enumerate_strings(s):
        counts[classify(w)] += 1
    assert counts == {Region.S1_PLUS: 8, Region.S1_PM: 16, Region.S1_MINUS: 8,
                      Region.S2_PLUS: 8, Region.S2_PM: 16, Region.S2_MINUS: 8}
    assert region_size(s, Region.S1_PM) == 16
    assert region_size(Shape(5, 3), Region.S1_PLUS) == 2


@pytest.mark.parametrize("shape", shapes(10, n_min=2, strict=True))
def test_region_sizes_closed_form(shape):
    total = 0
    for reg in Region:
        got = int(region_mask(shape, reg).sum())
        assert got == region_size(shape, reg)
        total += got
    assert total == 2 ** shape.n
    # the two PM regions together hold 2^n - 2^(n-r+1) elements
    assert region_size(shape, Region.S1_PM) == 2 ** (shape.n - 1) - 2 ** (shape.n - shape.r)


@pytest.mark.parametrize("shape", shapes(8, n_min=2, strict=True))
def test_region_mask_matches_classify(shape):
    for w in enumerate_strings(shape):
        assert region_mask(shape, classify(w))[w.index]
        assert classify(w).half == (1 if shape.m in w.neg_set else 2)


@pytest.mark.parametrize("shape", shapes(7, n_min=2, strict=True))
def test_halves_isomorphic_to_smaller_lattice(shape):
    els = enumerate_strings(shape)
    for half in (1, 2):
        part = [w for w in els if classify(w).half == half]
        images = [to_smaller(w) for w in part]
        assert len(set(images)) == len(part) == 2 ** (shape.n - 1)
        for a, ia in zip(part, images):
            for b, ib in zip(part, images):
                assert leq(a, b) == leq(ia, ib)


@pytest.mark.parametrize("shape", shapes(8, n_min=2, strict=True))
def test_nothing_in_s2pm_below_s1pm(shape):
    els = enumerate_strings(shape)
    pm1 = [w for w in els if classify(w) is Region.S1_PM]
    pm2 = [w for w in els if classify(w) is Region.S2_PM]
    assert not any(leq(a, b) for a in pm2 for b in pm1)


@pytest.mark.parametrize("shape", [Shape(5, 3), Shape(6, 2), Shape(2, 1)])
def test_lemma_examples(shape):
    rep = check_lemma_properties(shape)
    assert rep.results == {k: True for k in ("i", "ii", "iii", "iv", "v")}
    assert all(v == [] for v in rep.counterexamples.values())


def test_lemma_item_i_by_brute_force():
    s = Shape(6, 3)
    up = upset([special(s, "Theta")])
    assert up == {w for w in enumerate_strings(s) if classify(w) in (Region.S1_PLUS, Region.S2_PLUS)}


def test_lemma_report_detects_failure(monkeypatch):
    # break the region predicate and the report must say so, not raise
    import signlattice.regions as regions
    real = regions.region_mask

    def swapped(shape, region):
        if region is Region.S2_PM:
            return real(shape, Region.S1_PM)
        return real(shape, region)

    monkeypatch.setattr(regions, "region_mask", swapped)
    rep = check_lemma_properties(Shape(5, 3))
    assert not rep.ok
    assert not rep.results["v"] and rep.counterexamples["v"]
