import pytest
from hypothesis import given
from hypothesis import strategies as st

from osgkit.properties import inverses_of
from osgkit.subsets import (
    Subset,
    downward_closure,
    is_ideal,
    is_simple,
    principal_ideal,
    subset_product,
)


def members(subset):
    return subset.members()


# ---------------------------------------------------------------------------
# Subset basics


def test_subset_construction_and_queries():
    s = Subset.of([0, 2], 3)
    assert members(s) == (0, 2)
    assert 0 in s and 1 not in s and 2 in s
    assert len(s) == 2
    assert bool(s)
    assert not Subset.empty(3)
    assert members(Subset.full(3)) == (0, 1, 2)


def test_subset_rejects_out_of_range():
    with pytest.raises(ValueError):
        Subset.of([3], 3)
    with pytest.raises(ValueError):
        Subset(0b1000, 3)


def test_subset_operations_demand_same_carrier():
    with pytest.raises(ValueError):
        Subset.full(2) | Subset.full(3)


# ---------------------------------------------------------------------------
# downward closure


def test_closure_sl2(sl2):
    assert members(downward_closure(sl2, Subset.of([0], 2))) == (0, 1)
    assert members(downward_closure(sl2, Subset.of([1], 2))) == (1,)


def test_closure_of_empty_is_empty(valid_fixtures):
    for s in valid_fixtures.values():
        assert not downward_closure(s, Subset.empty(s.order))


@st.composite
def corpus_subsets(draw, corpus):
    s = draw(st.sampled_from(corpus))
    bits = draw(st.integers(0, (1 << s.order) - 1))
    return s, Subset(bits, s.order)


@pytest.fixture(scope="module")
def subset_strategy(corpus_upto3_iso):
    return corpus_subsets(corpus_upto3_iso)


def test_closure_laws(corpus_upto3_iso):
    @given(corpus_subsets(corpus_upto3_iso))
    def run(case):
        s, x = case
        closed = downward_closure(s, x)
        assert x.issubset(closed)
        assert downward_closure(s, closed) == closed

    run()


def test_closure_monotone(corpus_upto3_iso):
    @given(corpus_subsets(corpus_upto3_iso), st.integers(0, 511))
    def run(case, extra_bits):
        s, x = case
        bigger = Subset(x.bits | (extra_bits & ((1 << s.order) - 1)), s.order)
        assert downward_closure(s, x).issubset(downward_closure(s, bigger))

    run()


# ---------------------------------------------------------------------------
# subset product


def test_product_examples(sl2, lz2):
    assert members(subset_product(sl2, Subset.of([0], 2), Subset.full(2))) == (0, 1)
    assert members(subset_product(lz2, Subset.of([0], 2), Subset.of([1], 2))) == (0,)


def test_product_with_empty(valid_fixtures):
    for s in valid_fixtures.values():
        full = Subset.full(s.order)
        assert not subset_product(s, Subset.empty(s.order), full)
        assert not subset_product(s, full, Subset.empty(s.order))


def test_product_monotone(corpus_upto3_iso):
    @given(corpus_subsets(corpus_upto3_iso), st.integers(0, 511), st.integers(0, 511))
    def run(case, ybits, extra):
        s, x = case
        mask = (1 << s.order) - 1
        y = Subset(ybits & mask, s.order)
        x_big = Subset(x.bits | (extra & mask), s.order)
        assert subset_product(s, x, y).issubset(subset_product(s, x_big, y))
        assert subset_product(s, y, x).issubset(subset_product(s, y, x_big))

    run()


# ---------------------------------------------------------------------------
# principal ideals


def test_principal_ideal_examples(sl2, lz2, t1):
    assert members(principal_ideal(sl2, 0, "left")) == (0, 1)
    assert members(principal_ideal(lz2, 0, "right")) == (0,)
    assert members(principal_ideal(t1, 0, "two_sided")) == (0,)


def test_principal_ideal_rejects_bad_side(sl2):
    with pytest.raises(ValueError):
        principal_ideal(sl2, 0, "up")


def test_principal_ideals_are_ideals(corpus_upto3_iso):
    for s in corpus_upto3_iso:
        for a in range(s.order):
            for side in ("left", "right", "two_sided"):
                assert is_ideal(s, principal_ideal(s, a, side), side).ok


def test_regular_element_left_ideal_is_closed_translate(corpus_upto3_iso):
    # for a with a <= a*x*a for some x, ({a} u Sa] equals (Sa]
    for s in corpus_upto3_iso:
        full = Subset.full(s.order)
        for a in range(s.order):
            regular = a in downward_closure(
                s, subset_product(s, subset_product(s, Subset.of([a], s.order), full),
                                  Subset.of([a], s.order))
            )
            if not regular:
                continue
            sa = downward_closure(s, subset_product(s, full, Subset.of([a], s.order)))
            assert principal_ideal(s, a, "left") == sa


# ---------------------------------------------------------------------------
# is_ideal / is_simple


def test_is_ideal_examples(sl2):
    assert is_ideal(sl2, Subset.of([1], 2), "two_sided").ok
    verdict = is_ideal(sl2, Subset.of([0], 2), "left")
    assert not verdict.ok
    assert verdict.reason == "left_absorption"
    assert verdict.pair == (1, 0)  # f*e = f escapes {e}


def test_is_ideal_full_carrier(valid_fixtures):
    for s in valid_fixtures.values():
        for side in ("left", "right", "two_sided"):
            assert is_ideal(s, Subset.full(s.order), side).ok


def test_is_ideal_closure_witness(sl2):
    # {e} absorbs nothing on the right but also fails downward closure
    verdict = is_ideal(sl2, Subset.of([0], 2), "right")
    assert not verdict.ok


def test_is_ideal_rejects_empty(sl2):
    with pytest.raises(ValueError):
        is_ideal(sl2, Subset.empty(2), "left")


def test_is_ideal_witness_reverifies(corpus_upto3_iso):
    for s in corpus_upto3_iso[:40]:
        for bits in range(1, 1 << s.order):
            candidate = Subset(bits, s.order)
            verdict = is_ideal(s, candidate, "two_sided")
            if verdict.ok:
                continue
            x, y = verdict.pair
            if verdict.reason == "left_absorption":
                assert y in candidate and s.mult[x][y] not in candidate
            elif verdict.reason == "right_absorption":
                assert x in candidate and s.mult[x][y] not in candidate
            else:
                assert x not in candidate and y in candidate and s.leq[x][y]


def test_is_simple_examples(lz2, t1):
    assert is_simple(lz2, "left").ok
    verdict = is_simple(lz2, "right")
    assert not verdict.ok
    assert verdict.witness.members() == (0,)
    for side in ("left", "right", "two_sided"):
        assert is_simple(t1, side).ok


def test_simple_witness_is_minimal(corpus_upto3_iso):
    for s in corpus_upto3_iso[:40]:
        verdict = is_simple(s, "two_sided")
        if verdict.ok:
            continue
        size = len(verdict.witness)
        for bits in range(1, 1 << s.order):
            candidate = Subset(bits, s.order)
            if len(candidate) < size and len(candidate) < s.order:
                assert not is_ideal(s, candidate, "two_sided").ok


# ---------------------------------------------------------------------------
# cross-module invariant: inverse pairs generate equal one-sided ideals


def test_inverse_pairs_share_translates(corpus_upto3_iso):
    for s in corpus_upto3_iso:
        for a in range(s.order):
            for b in inverses_of(s, a):
                assert principal_ideal(s, a, "left") == principal_ideal(
                    s, s.mult[b][a], "left"
                )
