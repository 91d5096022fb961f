import random

import pytest
from hypothesis import given, strategies as st

from quadportrait import (
    MarkedCover,
    MoveError,
    UnknownPointError,
    apply_swap,
    derive_portrait,
    mint_preimage,
    orbit_profile,
    validate_cover,
)
from quadportrait.cover import label_sum_violations
from quadportrait.oracle import random_cover

from conftest import BASILICA, RABBIT, SQUARING, cov


class TestValidate:
    def test_squaring_cover_passes(self):
        assert validate_cover(cov(SQUARING)).passed

    def test_forced_extra_vertex_overloads_a_critical(self):
        # D is not on a critical orbit, so validate_cover ignores it; force
        # it into the vertex set to exercise the label-sum rule directly.
        cover = cov("A*>B B*>A D>A")
        assert validate_cover(cover).passed
        violations = label_sum_violations(
            cover.mapping, cover.critical, {"A", "B", "D"}
        )
        assert [(v.rule, v.points) for v in violations] == [("label-sum", ("A",))]

    def test_tail_of_one_fails_at_the_entry_point(self):
        report = validate_cover(cov("A*>T T>T B*>B"))
        assert not report.passed
        assert report.violations[0].rule == "label-sum"
        assert report.violations[0].points == ("T",)

    def test_passed_iff_no_violations(self):
        good = validate_cover(cov("A*>B* B>A"))
        bad = validate_cover(cov("A*>T T>T B*>B"))
        assert good.passed and good.violations == ()
        assert not bad.passed and bad.violations != ()


TWO_CYCLE = "A*>B* B>A"


class TestOrbitProfile:
    @pytest.mark.parametrize(
        "text,point,expected",
        [
            (RABBIT, "A", (0, 3, "A")),
            ("A*>P P>T T>B* B>U U>T", "A", (2, 3, "T")),
            (SQUARING, "A", (0, 1, "A")),
        ],
    )
    def test_examples(self, text, point, expected):
        profile = orbit_profile(cov(text), point)
        assert (
            profile.tail_length,
            profile.cycle_length,
            profile.first_periodic,
        ) == expected

    def test_unknown_point(self):
        with pytest.raises(UnknownPointError):
            orbit_profile(cov(SQUARING), "Z")

    def test_profile_consistency(self):
        cover = cov("A*>P P>T T>B* B>U U>T")
        profile = orbit_profile(cover, "A")
        assert cover.iterate("A", profile.tail_length) == profile.first_periodic
        assert (
            cover.iterate("A", profile.tail_length + profile.cycle_length)
            == profile.first_periodic
        )


class TestDerivePortrait:
    def test_off_orbit_point_excluded(self):
        portrait = derive_portrait(cov("A*>B B>A X>B C*>C"))
        assert portrait.vertices == {"A", "B", "C"}

    def test_squaring_portrait_is_the_two_fixed_criticals(self):
        portrait = derive_portrait(cov(SQUARING))
        assert portrait.vertices == {"A", "B"}
        assert portrait.cycle_of("A") == {"A"}

    def test_dropped_fixed_point_excluded(self):
        # The shape left behind by a cycle decrease: Q maps to itself off
        # the critical orbits.
        portrait = derive_portrait(cov("A*>P P>A Q>Q B*>B"))
        assert portrait.vertices == {"A", "P", "B"}

    def test_invalid_cover_raises_with_report(self):
        from quadportrait import InvalidCoverError

        with pytest.raises(InvalidCoverError) as err:
            derive_portrait(cov("A*>T T>T B*>B"))
        assert err.value.report.violations

    def test_portrait_invariants_over_enumeration(self, classes6):
        for cover in classes6:
            portrait = derive_portrait(cover)
            for v in portrait.vertices:
                assert portrait.mapping[v] in portrait.vertices
            reachable: set[str] = set()
            for c in portrait.critical:
                x = c
                while x not in reachable:
                    reachable.add(x)
                    x = portrait.mapping[x]
            assert reachable == set(portrait.vertices)


class TestApplySwap:
    def test_two_cycle_splits_to_fixed_points(self):
        result = apply_swap(cov(TWO_CYCLE), "A", "B")
        assert result.mapping == {"A": "A", "B": "B"}
        assert set(result.critical) == {"A", "B"}

    def test_cycle_shortens_and_drops_a_point(self):
        result = apply_swap(cov(RABBIT), "P", "Q")
        assert result.mapping == {"A": "P", "P": "A", "Q": "Q", "B": "B"}
        assert result.critical == ("A", "B")
        assert derive_portrait(result).vertices == {"A", "P", "B"}

    def test_involution(self):
        cover = cov(RABBIT)
        assert apply_swap(apply_swap(cover, "P", "Q"), "P", "Q") == cover

    def test_point_set_preserved(self):
        cover = cov(RABBIT)
        assert apply_swap(cover, "A", "Q").points == cover.points

    def test_critical_set_preserved_when_disjoint_or_equal(self):
        cover = cov(RABBIT)
        assert set(apply_swap(cover, "P", "Q").critical) == {"A", "B"}
        assert set(apply_swap(cover, "A", "B").critical) == {"A", "B"}

    def test_swap_moves_a_critical_label(self):
        result = apply_swap(cov(BASILICA), "A", "P")
        assert result.critical == ("P", "B")

    def test_errors(self):
        with pytest.raises(MoveError):
            apply_swap(cov(SQUARING), "A", "A")
        with pytest.raises(UnknownPointError):
            apply_swap(cov(SQUARING), "A", "Z")

    @given(st.integers(0, 10**6))
    def test_involution_on_random_covers(self, seed):
        cover = random_cover(7, seed)
        rng = random.Random(seed)
        a, b = rng.sample(sorted(cover.points), 2)
        assert apply_swap(apply_swap(cover, a, b), a, b) == cover


class TestMintPreimage:
    def test_mint_for_tail_head(self):
        cover, name = mint_preimage(cov("A*>P P>T T>T B*>B"), 1)
        assert name == "d0"
        assert cover.mapping["d0"] == "A"

    def test_mint_refused_when_label_sum_full(self):
        with pytest.raises(MoveError):
            mint_preimage(cov(SQUARING), 1)

    def test_mint_when_critical_maps_to_critical(self):
        cover, name = mint_preimage(cov("A*>B* B>Q Q>T T>T"), 1)
        assert cover.mapping[name] == "A"

    def test_fresh_names_skip_used_numbers(self):
        cover = MarkedCover(
            {"A": "P", "P": "T", "T": "T", "B": "B", "d0": "T"}, ("A", "B")
        )
        _, name = mint_preimage(cover, 1)
        assert name == "d1"

    def test_bad_index(self):
        with pytest.raises(MoveError):
            mint_preimage(cov(SQUARING), 3)


class TestConstruction:
    def test_map_must_be_total(self):
        with pytest.raises(ValueError):
            MarkedCover({"A": "Z", "B": "B"}, ("A", "B"))

    def test_critical_must_be_distinct(self):
        with pytest.raises(ValueError):
            MarkedCover({"A": "A", "B": "B"}, ("A", "A"))

    def test_illegal_name(self):
        with pytest.raises(ValueError):
            MarkedCover({"A b": "A b", "B": "B"}, ("A b", "B"))
