"""Axis labelings: census, canonical kinds, classification witnesses."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewpersp.indices import (
    ALL_PERMS,
    CORRELATION,
    IDENTITY,
    INDICES,
    PAIRS,
    Pair,
    extend,
    parse_cycles,
)
from skewpersp.psts import validate_configuration
from skewpersp.veblen import (
    PARTNER,
    CanonicalKind,
    Side,
    VeblenConfig,
    aut_perms,
    canonical,
    classify_labeling,
    enumerate_labelings,
    extend_orbit,
    from_psts,
    lemma23_representatives,
    star,
    star_lines,
    star_triangles,
    to_psts,
    top,
    top_lines,
)

KINDS = tuple(CanonicalKind)


class TestStarsAndTops:
    def test_shapes(self):
        for i in INDICES:
            assert len(star(i)) == 3 and len(top(i)) == 3
            assert all(i in u for u in star(i))
            assert all(i not in u for u in top(i))

    def test_correlation_swaps(self):
        for i in INDICES:
            assert CORRELATION.apply_line(star(i)) == top(i)
            assert CORRELATION.apply_line(top(i)) == star(i)


class TestVeblenConfig:
    def test_rejects_wrong_line_count(self):
        with pytest.raises(ValueError):
            VeblenConfig((top(1), top(2), top(3)))

    def test_rejects_bad_degrees(self):
        with pytest.raises(ValueError, match="exactly 2"):
            VeblenConfig((top(1), top(2), top(3), star(3)))

    def test_rejects_repeated_lines(self):
        with pytest.raises(ValueError):
            VeblenConfig((top(1), top(1), top(2), top(3)))

    def test_normalized_line_order(self):
        v = VeblenConfig(tuple(reversed(canonical(CanonicalKind.G2).lines)))
        assert v == canonical(CanonicalKind.G2)


class TestCanonicalKinds:
    def test_g2_is_the_four_tops(self):
        assert canonical(CanonicalKind.G2).lines == tuple(
            sorted((top(i) for i in INDICES), key=lambda ln: sorted(map(str, ln)))
        ) or set(canonical(CanonicalKind.G2).lines) == {top(i) for i in INDICES}

    def test_b2_forced_completion(self):
        # frozen from the exhaustive completion search: the only other
        # completion of {T(1), T(2)} is the four-tops labeling itself
        v = canonical(CanonicalKind.B2)
        non_tops = [ln for ln in v.lines if ln not in {top(i) for i in INDICES}]
        assert sorted(map(sorted, (map(str, ln) for ln in non_tops))) == [
            ["12", "13", "24"],
            ["12", "14", "23"],
        ]
        completions = [
            w for w in enumerate_labelings()
            if w.has_line(top(1)) and w.has_line(top(2))
        ]
        assert len(completions) == 2
        other = next(w for w in completions if w != v)
        assert other == canonical(CanonicalKind.G2)

    def test_starred_kinds_are_complement_images(self):
        for kind in KINDS:
            assert canonical(PARTNER[kind]) == canonical(kind).apply(CORRELATION)

    def test_six_distinct_labelings(self):
        assert len({canonical(kind) for kind in KINDS}) == 6

    def test_tops_per_kind(self):
        want = {"G2": 4, "G2_STAR": 0, "B2": 2, "V4": 0, "V5": 1, "V6": 0}
        for kind in KINDS:
            assert len(top_lines(canonical(kind))) == want[kind.value]

    def test_stars_mirror_tops(self):
        for kind in KINDS:
            assert len(star_lines(canonical(kind))) == len(
                top_lines(canonical(PARTNER[kind]))
            )


class TestCensus:
    def test_count(self, census):
        assert len(census) == 30

    def test_all_valid_configurations(self, census):
        for v in census:
            assert validate_configuration(to_psts(v), 2, 3)

    def test_sorted_and_duplicate_free(self, census):
        keys = [v.sort_key() for v in census]
        assert keys == sorted(keys)
        assert len(set(census)) == 30

    def test_contains_the_canonical_kinds(self, census):
        for kind in KINDS:
            assert canonical(kind) in census

    def test_closed_under_the_48_maps(self, census):
        pool = set(census)
        for v in census[:5]:
            for phi in ALL_PERMS:
                assert v.apply(extend(phi)) in pool
            assert v.apply(CORRELATION) in pool


class TestStarTriangles:
    def test_frozen_counts(self):
        want = {"G2": 4, "G2_STAR": 0, "B2": 2, "V4": 0, "V5": 1, "V6": 0}
        for kind in KINDS:
            assert len(star_triangles(canonical(kind))) == want[kind.value]

    def test_b2_members(self):
        assert star_triangles(canonical(CanonicalKind.B2)) == (1, 2)

    def test_v5_member(self):
        assert star_triangles(canonical(CanonicalKind.V5)) == (3,)

    def test_star_line_is_not_a_star_triangle(self, census):
        for v in census:
            for i in star_triangles(v):
                assert not v.has_line(star(i))

    @given(st.sampled_from(ALL_PERMS), st.sampled_from(KINDS))
    def test_equivariance(self, phi, kind):
        v = canonical(kind)
        moved = v.apply(extend(phi))
        assert sorted(phi(i) for i in star_triangles(v)) == list(
            star_triangles(moved)
        )


class TestAutomorphisms:
    def test_frozen_orders(self):
        want = {"G2": 24, "G2_STAR": 24, "B2": 4, "V4": 4, "V5": 3, "V6": 3}
        for kind in KINDS:
            assert len(aut_perms(canonical(kind))) == want[kind.value]

    def test_b2_stabilizes_both_blocks(self):
        for phi in aut_perms(canonical(CanonicalKind.B2)):
            assert {phi(1), phi(2)} == {1, 2}
            assert {phi(3), phi(4)} == {3, 4}

    def test_v5_fixes_three(self):
        group = aut_perms(canonical(CanonicalKind.V5))
        assert all(phi(3) == 3 for phi in group)
        # strictly smaller than the full stabilizer of 3 (order 6)
        assert len(group) == 3

    def test_v5_transposition_moves_lines(self):
        # (1,2) fixes 3 yet does not preserve the labeling
        v = canonical(CanonicalKind.V5)
        assert v.apply(extend(parse_cycles("(1,2)"))) != v

    def test_closed_under_composition(self):
        for kind in (CanonicalKind.B2, CanonicalKind.V5):
            group = set(aut_perms(canonical(kind)))
            for a, b in itertools.product(group, repeat=2):
                assert a.compose(b) in group


class TestClassification:
    def test_canonical_classifies_as_itself(self):
        w = classify_labeling(canonical(CanonicalKind.G2))
        assert (w.kind, w.alpha, w.side) == (CanonicalKind.G2, IDENTITY, Side.PLAIN)

    def test_moved_b2(self):
        v = canonical(CanonicalKind.B2).apply(extend(parse_cycles("(1,3)(2,4)")))
        w = classify_labeling(v)
        assert w.kind is CanonicalKind.B2 and w.side is Side.PLAIN
        assert w.verify(v)

    def test_census_fully_classified(self, census):
        for v in census:
            w = classify_labeling(v)
            assert w is not None and w.verify(v)

    def test_witness_verify_rejects_wrong_labeling(self, census):
        w = classify_labeling(canonical(CanonicalKind.B2))
        assert not w.verify(canonical(CanonicalKind.V5))

    def test_extend_orbit_sizes(self):
        want = {"G2": 1, "G2_STAR": 1, "B2": 6, "V4": 6, "V5": 8, "V6": 8}
        for kind in KINDS:
            assert len(extend_orbit(canonical(kind))) == want[kind.value]

    def test_orbits_cover_census(self, census):
        covered = set()
        for kind in KINDS:
            covered.update(extend_orbit(canonical(kind)))
        assert covered == set(census)


class TestLemma23Representatives:
    def test_class_counts(self):
        # computed from the brute-forced automorphism groups
        want = {"G2": 5, "B2": 10, "V5": 10}
        for kind_name, n in want.items():
            assert len(lemma23_representatives(CanonicalKind[kind_name])) == n

    def test_classes_partition_s4(self):
        for kind in (CanonicalKind.G2, CanonicalKind.B2, CanonicalKind.V5):
            classes = lemma23_representatives(kind)
            members = [f for c in classes for f in c]
            assert sorted(members) == sorted(ALL_PERMS)


class TestPstsBoundary:
    def test_round_trip(self, census):
        for v in census:
            assert from_psts(to_psts(v)) == v

    def test_point_names(self):
        s = to_psts(canonical(CanonicalKind.G2))
        assert s.points == ("c12", "c13", "c14", "c23", "c24", "c34")

    def test_wrong_points_rejected(self):
        from skewpersp.psts import Psts

        s = Psts(["x", "y", "z"], [])
        with pytest.raises(ValueError, match="expected points"):
            from_psts(s)
