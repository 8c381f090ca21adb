import random

import pytest

from osgkit.properties import (
    generator_uniqueness,
    h_commutes,
    inverses_of,
    is_group_like,
    is_inverse_ordered,
    ordered_idempotents,
    regularity,
    resolve_predicate,
)
from osgkit.relations import greens_relations
from osgkit.structure import opposite, relabel
from osgkit.subsets import downward_closure, subset_product, Subset


# ---------------------------------------------------------------------------
# ordered idempotents and inverses


def test_ordered_idempotents_examples(sl2, n2, t1):
    assert ordered_idempotents(sl2).members() == (0, 1)
    assert ordered_idempotents(n2).members() == (0,)
    assert ordered_idempotents(t1).members() == (0,)


def test_inverses_examples(lz2, sl2, t1):
    assert inverses_of(lz2, 0).members() == (0, 1)
    assert inverses_of(sl2, 1).members() == (1,)
    assert inverses_of(sl2, 0).members() == (0,)
    assert inverses_of(t1, 0).members() == (0,)


def test_inverse_symmetry(corpus_upto3_iso):
    for s in corpus_upto3_iso:
        for a in range(s.order):
            for b in inverses_of(s, a):
                assert a in inverses_of(s, b)


def test_inverse_pair_products_are_idempotent(corpus_upto3_iso):
    for s in corpus_upto3_iso:
        idem = ordered_idempotents(s)
        for a in range(s.order):
            for b in inverses_of(s, a):
                assert s.mult[a][b] in idem
                assert s.mult[b][a] in idem


# ---------------------------------------------------------------------------
# regularity


def test_regularity_examples(lz2, n2, t1):
    assert regularity(lz2, "completely_regular").holds
    report = regularity(n2, "regular")
    assert not report.holds
    assert report.witness == (1,)
    for kind in ("regular", "completely_regular", "right_regular", "left_regular"):
        assert regularity(t1, kind).holds


def test_regularity_rejects_unknown_kind(t1):
    with pytest.raises(ValueError):
        regularity(t1, "hyper_regular")


def test_completely_regular_implies_regular(corpus_upto3_iso):
    for s in corpus_upto3_iso:
        if regularity(s, "completely_regular").holds:
            assert regularity(s, "regular").holds


def test_completely_regular_witness_powers(corpus_upto3_iso):
    # a <= a*x*a2 and a <= a2*x*a for a shared x
    for s in corpus_upto3_iso:
        if not regularity(s, "completely_regular").holds:
            continue
        for a in range(s.order):
            aa = s.mult[a][a]
            assert any(
                s.leq[a][s.mult[s.mult[a][x]][aa]]
                and s.leq[a][s.mult[s.mult[aa][x]][a]]
                for x in range(s.order)
            )


def test_regularity_witness_reverifies(corpus_upto3_iso):
    for s in corpus_upto3_iso:
        report = regularity(s, "regular")
        if report.holds:
            continue
        (a,) = report.witness
        single = Subset.of([a], s.order)
        asa = subset_product(s, subset_product(s, single, Subset.full(s.order)), single)
        assert a not in downward_closure(s, asa)


# ---------------------------------------------------------------------------
# group-like


def test_group_like_examples(lz2, sl2, t1):
    assert is_group_like(lz2, "left").holds
    right = is_group_like(lz2, "right")
    assert not right.holds and right.witness == (0, 1)
    two = is_group_like(sl2, "two_sided")
    assert not two.holds and two.witness == (0, 1)
    assert is_group_like(t1, "two_sided").holds


def test_group_like_not_applicable_on_non_regular(n2):
    report = is_group_like(n2, "two_sided")
    assert not report.applicable
    assert not report.holds
    assert report.witness == (1,)  # least non-regular element


def test_group_like_rejects_unknown_kind(t1):
    with pytest.raises(ValueError):
        is_group_like(t1, "upward")


# ---------------------------------------------------------------------------
# H-commutativity


def test_h_commutes_examples(sl2, lz2, t1):
    assert h_commutes(sl2, 0, 1)
    assert not h_commutes(lz2, 0, 1)
    assert h_commutes(t1, 0, 0)


def test_h_commutes_is_symmetric(corpus_upto3_iso):
    for s in corpus_upto3_iso[:60]:
        for a in range(s.order):
            for b in range(s.order):
                assert h_commutes(s, a, b) == h_commutes(s, b, a)


# ---------------------------------------------------------------------------
# inverse ordered structures


def test_is_inverse_ordered_examples(sl2, lz2, t1):
    assert is_inverse_ordered(sl2).holds
    report = is_inverse_ordered(lz2)
    assert not report.holds
    assert report.witness == (0, 0, 1)
    assert is_inverse_ordered(t1).holds


def test_is_inverse_witness_reverifies(corpus_upto3_iso):
    for s in corpus_upto3_iso:
        report = is_inverse_ordered(s)
        if report.holds:
            continue
        if len(report.witness) == 1:
            assert not regularity(s, "regular").holds
            continue
        a, b, c = report.witness
        inv = inverses_of(s, a)
        assert b in inv and c in inv
        assert not greens_relations(s).H.related(b, c)


def test_is_inverse_agrees_with_opposite(corpus_upto3_iso, valid_fixtures):
    for s in [*corpus_upto3_iso, *valid_fixtures.values()]:
        assert is_inverse_ordered(s).holds == is_inverse_ordered(opposite(s)).holds


# ---------------------------------------------------------------------------
# generator uniqueness


def test_generator_uniqueness_examples(sl2, lz2, t1):
    assert generator_uniqueness(sl2, "left").holds
    report = generator_uniqueness(lz2, "left")
    assert not report.holds
    assert report.witness == (0, 1)
    assert generator_uniqueness(t1, "left").holds
    assert generator_uniqueness(t1, "right").holds


def test_generator_uniqueness_rejects_unknown_side(t1):
    with pytest.raises(ValueError):
        generator_uniqueness(t1, "two_sided")


# ---------------------------------------------------------------------------
# isomorphism invariance


ALL_DECIDERS = [
    lambda s: regularity(s, "regular").holds,
    lambda s: regularity(s, "completely_regular").holds,
    lambda s: regularity(s, "right_regular").holds,
    lambda s: regularity(s, "left_regular").holds,
    lambda s: is_group_like(s, "two_sided").holds,
    lambda s: is_group_like(s, "left").holds,
    lambda s: is_group_like(s, "right").holds,
    lambda s: is_inverse_ordered(s).holds,
    lambda s: generator_uniqueness(s, "left").holds,
    lambda s: generator_uniqueness(s, "right").holds,
    lambda s: ordered_idempotents(s).bits.bit_count(),
    lambda s: sorted(len(inverses_of(s, a)) for a in range(s.order)),
]


def test_predicates_invariant_under_100_relabelings(valid_fixtures):
    rng = random.Random(1)
    for s in valid_fixtures.values():
        reference = [decide(s) for decide in ALL_DECIDERS]
        for _ in range(100):
            perm = list(range(s.order))
            rng.shuffle(perm)
            moved = relabel(s, perm)
            assert [decide(moved) for decide in ALL_DECIDERS] == reference


def test_resolve_predicate_and_aliases(sl2):
    assert resolve_predicate("inverse")(sl2)
    assert resolve_predicate("is_inverse_ordered")(sl2)
    assert resolve_predicate("t_simple")(sl2) == resolve_predicate("group_like")(sl2)
    with pytest.raises(KeyError):
        resolve_predicate("nope")
