import pytest

from k3cy.enumeration import partitions
from k3cy.profile import (
    ProfileError,
    canonical_degree,
    fibre_components,
    ij_family_profile,
    is_calabi_yau_profile,
    make_profile,
    profile_from_dict,
    profile_to_dict,
    quintic_mirror_profile,
    smoothness,
)


class TestMakeProfile:
    def test_quintic_mirror(self):
        p = quintic_mirror_profile()
        assert (p.degree, p.over_zero, p.over_infinity, p.over_quarter) == (
            5, (5,), (4, 1), (1, 1, 1, 1, 1),
        )
        assert p.extra_ramification == 1

    def test_identity_cover(self):
        p = make_profile(1, [1], [1], [1])
        assert p.extra_ramification == 0

    def test_derived_ramification(self):
        p = make_profile(4, [4], [2, 2], [1, 1, 1, 1])
        assert p.extra_ramification == 1 + 2 + 4 - 4 - 2

    def test_canonicalized_and_swap_invariant(self):
        a = make_profile(5, [5], [1, 4], [1, 1, 1, 1, 1])
        b = make_profile(5, [5], [4, 1], [1, 1, 1, 1, 1])
        assert a == b

    def test_rejects_negative_extra_ramification(self):
        with pytest.raises(ProfileError):
            make_profile(2, [2], [2], [2])

    def test_rejects_bad_sum(self):
        with pytest.raises(ProfileError):
            make_profile(5, [4], [4, 1], [1, 1, 1, 1, 1])

    def test_rejects_nonpositive_parts(self):
        with pytest.raises(ProfileError):
            make_profile(3, [3, 0], [2, 1], [1, 1, 1])

    def test_rejects_empty_partition(self):
        with pytest.raises(ProfileError):
            make_profile(3, [], [2, 1], [1, 1, 1])

    def test_relation_holds_by_construction(self):
        for n in range(1, 9):
            for x in partitions(n):
                for y in partitions(n):
                    for z in partitions(n):
                        r = len(x) + len(y) + len(z) - n - 2
                        if r < 0:
                            continue
                        p = make_profile(n, x, y, z)
                        assert (
                            len(p.over_zero)
                            + len(p.over_infinity)
                            + len(p.over_quarter)
                            - p.degree
                            - p.extra_ramification
                            == 2
                        )


class TestCanonicalDegree:
    def test_quintic_mirror_is_trivial(self):
        assert canonical_degree(quintic_mirror_profile()) == 0

    def test_total_index_eight(self):
        # l = 1, y = 8: twist 8/4 - 1 = 1 against n + r - k - m = -1
        assert canonical_degree(make_profile(8, [8], [8], [1] * 8)) == 0

    def test_cubic_cover(self):
        # y = 3 has hcf(3, 4) = 1, twist 2; n + r - k - m = -1
        assert canonical_degree(make_profile(3, [3], [3], [1, 1, 1])) == 1


class TestCalabiYauCriterion:
    def test_quintic_mirror(self):
        verdict, _ = is_calabi_yau_profile(quintic_mirror_profile())
        assert verdict

    def test_single_point_needs_index_eight(self):
        verdict, reason = is_calabi_yau_profile(make_profile(5, [5], [5], [1] * 5))
        assert not verdict
        assert "index 8" in reason

    def test_index_eight_clause(self):
        verdict, _ = is_calabi_yau_profile(make_profile(8, [8], [8], [1] * 8))
        assert verdict

    def test_pair_outside_allowed_set(self):
        verdict, reason = is_calabi_yau_profile(make_profile(6, [6], [3, 3], [1] * 6))
        assert not verdict
        assert "{1, 2, 4}" in reason

    def test_criterion_matches_canonical_degree(self):
        # small version of the exhaustive acceptance scan
        for n in range(1, 9):
            for x in partitions(n):
                for y in partitions(n):
                    for z in partitions(n):
                        if len(x) + len(y) + len(z) - n - 2 < 0:
                            continue
                        p = make_profile(n, x, y, z)
                        verdict, _ = is_calabi_yau_profile(p)
                        assert verdict == (canonical_degree(p) == 0)


class TestSmoothness:
    def test_quintic_mirror_smooth(self):
        report = smoothness(quintic_mirror_profile())
        assert report.smooth
        assert report.singularities == ()
        assert report.caveat is None

    def test_single_node(self):
        report = smoothness(make_profile(5, [5], [4, 1], [2, 1, 1, 1]))
        assert not report.smooth
        assert report.singularities == ((2, 1),)
        assert "crepant" in report.caveat

    def test_unramified_quarter_always_smooth(self):
        for n in (2, 4, 8):
            pair = {2: [1, 1], 4: [2, 2], 8: [4, 4]}[n]
            assert smoothness(make_profile(n, [n], pair, [1] * n)).smooth

    def test_requires_calabi_yau(self):
        with pytest.raises(ProfileError):
            smoothness(make_profile(3, [3], [3], [1, 1, 1]))

    def test_singularity_counting(self):
        report = smoothness(make_profile(8, [8], [4, 4], [3, 2, 2, 1]))
        assert dict(report.singularities) == {3: 1, 2: 2}


class TestFibreComponents:
    def test_unramified_zero_fibre(self):
        assert fibre_components("zero", 1) == 4

    def test_zero_fibre_formula(self):
        # 4 + 6*(x-1) + 2*(x-1)*(x-2)
        assert fibre_components("zero", 5) == 4 + 6 * 4 + 2 * 4 * 3 == 52

    def test_infinity_counts(self):
        assert fibre_components("infinity", 1) == 31
        assert fibre_components("infinity", 2) == 11
        assert fibre_components("infinity", 4) == 1

    def test_index_eight_unsupported(self):
        with pytest.raises(ProfileError):
            fibre_components("infinity", 8)

    def test_unknown_location(self):
        with pytest.raises(ProfileError):
            fibre_components("quarter", 1)

    def test_zero_excess_matches_hodge_summand(self):
        for x in range(1, 21):
            assert fibre_components("zero", x) - 1 == 2 * x * x + 1

    def test_infinity_excess(self):
        assert [fibre_components("infinity", y) - 1 for y in (1, 2, 4)] == [30, 10, 0]


class TestJson:
    def test_round_trip_byte_identical(self):
        import json

        p = quintic_mirror_profile()
        first = json.dumps(profile_to_dict(p))
        reparsed = profile_from_dict(json.loads(first))
        assert json.dumps(profile_to_dict(reparsed)) == first

    def test_extra_ramification_ignored_on_input(self):
        data = profile_to_dict(quintic_mirror_profile())
        data["extra_ramification"] = 99
        assert profile_from_dict(data) == quintic_mirror_profile()

    def test_missing_key(self):
        with pytest.raises(ProfileError):
            profile_from_dict({"degree": 2, "over_zero": [2]})

    def test_non_dict(self):
        with pytest.raises(ProfileError):
            profile_from_dict([1, 2, 3])


def test_ij_family_profiles():
    p = ij_family_profile(1, 4)
    assert p == quintic_mirror_profile()
    for i, j in ((1, 1), (1, 2), (2, 2), (1, 4), (2, 4), (4, 4)):
        q = ij_family_profile(i, j)
        assert q.extra_ramification == 1
        assert is_calabi_yau_profile(q)[0]
