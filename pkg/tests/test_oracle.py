import pytest

from quadportrait import (
    OneCycle,
    OnePrePeriod,
    TwoComponents,
    brute_force_isomorphism,
    canonical_encoding,
    classify,
    cover_from_features,
    derive_portrait,
    enumerate_portraits,
    features_isomorphic,
    orbit_profile,
    random_cover,
    validate_cover,
)

from conftest import BASILICA, RABBIT, SQUARING, applicable_outcomes, cov

# Class counts frozen from an independent generate-and-dedupe pass run
# before this module was written.
CLASSES_PER_SIZE = {2: 2, 3: 2, 4: 7, 5: 13, 6: 27, 7: 43}


class TestBruteForce:
    def test_renamed_rabbit_has_a_witness(self):
        p = derive_portrait(cov(RABBIT))
        q = derive_portrait(cov("X*>Y Y>Z Z>X W*>W"))
        witness = brute_force_isomorphism(p, q)
        assert witness is not None
        eta = witness.mapping
        assert set(eta) == p.vertices
        assert set(eta.values()) == q.vertices
        for v in p.vertices:
            assert eta[p.mapping[v]] == q.mapping[eta[v]]
            assert p.label(v) == q.label(eta[v])
        assert {eta[c] for c in p.critical} == set(q.critical)

    def test_different_vertex_counts(self):
        p = derive_portrait(cov(BASILICA))
        q = derive_portrait(cov(SQUARING))
        assert brute_force_isomorphism(p, q) is None

    def test_one_cycle_critical_distances_distinguish(self):
        p = derive_portrait(cover_from_features(OneCycle(1, 3)))
        q = derive_portrait(cover_from_features(OneCycle(2, 2)))
        assert brute_force_isomorphism(p, q) is None
        assert not features_isomorphic(p, q)

    def test_symmetric(self, classes5):
        portraits = [derive_portrait(c) for c in classes5]
        for p in portraits:
            for q in portraits:
                assert (brute_force_isomorphism(p, q) is None) == (
                    brute_force_isomorphism(q, p) is None
                )


class TestEnumerate:
    def test_smallest_classes(self):
        covers = enumerate_portraits(2)
        features = {canonical_encoding(classify(derive_portrait(c))) for c in covers}
        assert features == {
            canonical_encoding(TwoComponents((0, 1), (0, 1))),
            canonical_encoding(OneCycle(1, 1)),
        }

    @pytest.mark.parametrize("n", sorted(CLASSES_PER_SIZE))
    def test_frozen_class_counts(self, n):
        expected = sum(CLASSES_PER_SIZE[m] for m in range(2, n + 1))
        assert len(enumerate_portraits(n)) == expected

    def test_all_outputs_validate(self, classes6):
        for cover in classes6:
            assert validate_cover(cover).passed
            assert derive_portrait(cover).vertices == cover.points

    def test_pairwise_non_isomorphic(self, classes5):
        portraits = [derive_portrait(c) for c in classes5]
        for i, p in enumerate(portraits):
            for q in portraits[i + 1 :]:
                assert brute_force_isomorphism(p, q) is None

    def test_worker_counts_agree(self):
        assert enumerate_portraits(5, workers=1) == enumerate_portraits(5, workers=2)

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            enumerate_portraits(1)

    def test_strictly_preperiodic_criticals_have_tail_at_least_two(self, classes7):
        for cover in classes7:
            for c in cover.critical:
                tail = orbit_profile(cover, c).tail_length
                assert tail == 0 or tail >= 2


class TestRandomCover:
    def test_deterministic(self):
        assert random_cover(5, 7) == random_cover(5, 7)

    def test_seed_sensitivity(self):
        samples = {  # not guaranteed pairwise distinct, but some must differ
            tuple(sorted(random_cover(5, seed).mapping.items())) for seed in range(10)
        }
        assert len(samples) > 1

    def test_samples_validate(self):
        for seed in range(100):
            assert validate_cover(random_cover(6, seed)).passed

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            random_cover(1, 0)


class TestCoverFromFeatures:
    def test_round_trip_on_enumerated_classes(self, classes6):
        for cover in classes6:
            features = classify(derive_portrait(cover))
            rebuilt = cover_from_features(features)
            assert classify(derive_portrait(rebuilt)) == features
            assert brute_force_isomorphism(
                derive_portrait(rebuilt), derive_portrait(cover)
            )

    @pytest.mark.parametrize(
        "bad",
        [
            TwoComponents((1, 1), (0, 1)),
            OnePrePeriod(tail=1, position=0, remainder=2),
            OnePrePeriod(tail=2, position=1, remainder=1),
            OneCycle(0, 2),
        ],
    )
    def test_unrealisable_parameters_rejected(self, bad):
        with pytest.raises(ValueError):
            cover_from_features(bad)


class TestClosureUnderMoves:
    def test_moved_portraits_stay_in_the_catalogue(self, classes5, classes6):
        catalogue = {
            canonical_encoding(classify(derive_portrait(c))) for c in classes6
        }
        for cover in classes5:
            for outcome in applicable_outcomes(cover):
                key = canonical_encoding(classify(outcome.portrait))
                assert key in catalogue
