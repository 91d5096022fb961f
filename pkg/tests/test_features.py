import pytest
from hypothesis import given, strategies as st

from quadportrait import (
    Contained,
    DisjointPrePeriods,
    Intersecting,
    MarkedCover,
    OneCycle,
    OnePrePeriod,
    TwoComponents,
    canonical_encoding,
    classify,
    derive_portrait,
    features_isomorphic,
    orbit_profile,
)

from conftest import BASILICA, RABBIT, SQUARING, cov

INTERSECTING = "A*>P P>M B*>Q Q>M M>T T>T"
DISJOINT = "A*>P P>T1 T1>T2 T2>T1 B*>Q Q>T2"


def classify_text(text):
    return classify(derive_portrait(cov(text)))


class TestClassify:
    @pytest.mark.parametrize(
        "text,expected",
        [
            (SQUARING, TwoComponents((0, 1), (0, 1))),
            (RABBIT, TwoComponents((0, 3), (0, 1))),
            (INTERSECTING, Intersecting(unique1=2, unique2=2, shared=1, cycle=1)),
            (DISJOINT, DisjointPrePeriods(tail1=2, tail2=2, dist12=1, dist21=1)),
            ("A*>B* B>A", OneCycle(dist12=1, dist21=1)),
            ("A*>P P>B* B>Q Q>A", OneCycle(dist12=2, dist21=2)),
            ("A*>P P>T T>B* B>U U>T", OnePrePeriod(tail=2, position=1, remainder=2)),
            ("A*>P P>B* B>T T>B", OnePrePeriod(tail=2, position=0, remainder=2)),
            ("A*>B* B>Q Q>T T>T", Contained(tail_outer=3, tail_inner=2, gap=1, cycle=1)),
            ("A*>X X>B* B>Q Q>T T>T", Contained(tail_outer=4, tail_inner=2, gap=2, cycle=1)),
        ],
    )
    def test_examples(self, text, expected):
        assert classify_text(text) == expected

    def test_contained_roles_ignore_stored_order(self):
        inner_first = cov("B*>Q Q>T T>T A*>B")
        assert classify(derive_portrait(inner_first)) == Contained(
            tail_outer=3, tail_inner=2, gap=1, cycle=1
        )

    def test_one_preperiod_roles_ignore_stored_order(self):
        periodic_first = cov("B*>U U>T T>B A*>P P>T")
        assert classify(derive_portrait(periodic_first)) == OnePrePeriod(
            tail=2, position=1, remainder=2
        )

    def test_position_zero_iff_entry_is_the_periodic_critical(self, classes6):
        for cover in classes6:
            features = classify(derive_portrait(cover))
            if not isinstance(features, OnePrePeriod):
                continue
            pre = next(
                c for c in cover.critical if orbit_profile(cover, c).tail_length > 0
            )
            per = next(
                c for c in cover.critical if orbit_profile(cover, c).tail_length == 0
            )
            entry = orbit_profile(cover, pre).first_periodic
            assert (features.position == 0) == (entry == per)
            assert features.remainder > 0


class TestCanonicalEncoding:
    def test_one_cycle_relabeling(self):
        assert canonical_encoding(OneCycle(1, 3)) == canonical_encoding(OneCycle(3, 1))

    def test_two_components_relabeling(self):
        assert canonical_encoding(
            TwoComponents((0, 1), (0, 2))
        ) == canonical_encoding(TwoComponents((0, 2), (0, 1)))

    def test_distinct_tags_distinct_encodings(self):
        contained = Contained(tail_outer=3, tail_inner=2, gap=1, cycle=1)
        intersecting = Intersecting(unique1=2, unique2=2, shared=1, cycle=1)
        assert canonical_encoding(contained) != canonical_encoding(intersecting)

    def test_layout_is_tag_byte_plus_big_endian_lengths(self):
        encoded = canonical_encoding(TwoComponents((0, 1), (0, 2)))
        assert encoded == bytes([1]) + b"".join(
            n.to_bytes(4, "big") for n in (0, 1, 0, 2)
        )
        assert len(canonical_encoding(OneCycle(1, 2))) == 1 + 2 * 4

    def test_disjoint_relabeling_swaps_distances(self):
        assert canonical_encoding(
            DisjointPrePeriods(2, 3, 1, 4)
        ) == canonical_encoding(DisjointPrePeriods(3, 2, 4, 1))


class TestFeaturesIsomorphic:
    def test_renamed_rabbit(self):
        renamed = cov("X*>Y Y>Z Z>X W*>W")
        assert features_isomorphic(
            derive_portrait(cov(RABBIT)), derive_portrait(renamed)
        )

    def test_squaring_vs_basilica(self):
        assert not features_isomorphic(
            derive_portrait(cov(SQUARING)), derive_portrait(cov(BASILICA))
        )

    def test_two_labelings_of_one_cycle(self):
        plain = cov("A*>P P>B* B>Q Q>R R>A")
        relabeled = MarkedCover(plain.mapping, ("B", "A"))
        assert features_isomorphic(
            derive_portrait(plain), derive_portrait(relabeled)
        )

    def test_stored_order_never_changes_canonical_features(self, classes6):
        for cover in classes6:
            reversed_cover = MarkedCover(cover.mapping, (cover.c2, cover.c1))
            assert features_isomorphic(
                derive_portrait(cover), derive_portrait(reversed_cover)
            )

    @given(st.randoms(use_true_random=False))
    def test_classify_invariant_under_renaming(self, rng):
        cover = cov(INTERSECTING)
        names = sorted(cover.points)
        fresh = [f"n{i}" for i in range(len(names))]
        rng.shuffle(fresh)
        renaming = dict(zip(names, fresh))
        renamed = MarkedCover(
            {renaming[p]: renaming[q] for p, q in cover.mapping.items()},
            (renaming[cover.c1], renaming[cover.c2]),
        )
        assert classify(derive_portrait(renamed)) == classify(derive_portrait(cover))
