import pytest

from k3cy.enumeration import infinity_partitions, partitions
from k3cy.hodge import (
    HodgeData,
    Unavailable,
    h11,
    h21_closed_form,
    hodge_summary,
)
from k3cy.profile import ProfileError, make_profile, quintic_mirror_profile


def cy_profiles_with_pair(max_degree):
    for n in range(1, max_degree + 1):
        for y in infinity_partitions(n):
            if len(y) != 2:
                continue
            for x in partitions(n):
                for z in partitions(n):
                    if len(x) + len(y) + len(z) - n - 2 < 0:
                        continue
                    yield make_profile(n, x, y, z)


class TestH11:
    def test_quintic_mirror(self):
        # 20 + 51 + 30 + 0
        assert h11(quintic_mirror_profile()) == 101

    def test_degree_two(self):
        assert h11(make_profile(2, [2], [1, 1], [1, 1])) == 20 + 9 + 30 + 30 == 89

    def test_degree_four(self):
        assert h11(make_profile(4, [4], [2, 2], [1] * 4)) == 20 + 33 + 10 + 10 == 73

    def test_rejects_single_infinity_point(self):
        with pytest.raises(ProfileError) as err:
            h11(make_profile(8, [8], [8], [1] * 8))
        assert "degeneration" in str(err.value)

    def test_rejects_non_calabi_yau(self):
        with pytest.raises(ProfileError):
            h11(make_profile(3, [3], [3], [1, 1, 1]))

    def test_lower_bound_over_scan(self):
        values = {}
        for p in cy_profiles_with_pair(10):
            values.setdefault(h11(p), p)
        minimum = min(values)
        assert minimum == 73
        argmin = values[minimum]
        assert (argmin.degree, argmin.over_zero, argmin.over_infinity) == (4, (4,), (2, 2))


class TestH21ClosedForm:
    def test_quintic_mirror(self):
        assert h21_closed_form(quintic_mirror_profile()) == 1

    def test_unramified_quarter_gives_k(self):
        for p in cy_profiles_with_pair(8):
            if p.is_unramified_over_quarter:
                assert h21_closed_form(p) == len(p.over_zero) == p.extra_ramification

    def test_nodal_degeneration(self):
        p = make_profile(5, [5], [4, 1], [2, 1, 1, 1])
        assert h21_closed_form(p) == 1 + (3 - 5) // 2 == 0


class TestHodgeSummary:
    def test_quintic_mirror(self):
        data = hodge_summary(quintic_mirror_profile())
        assert (data.h11, data.h21, data.euler) == (101, 1, 200)
        assert data.b2 == 101
        assert data.b3 == 4
        assert data.rho_h == 19
        assert data.smoothness.smooth
        assert not data.conditional

    def test_two_deformation_directions(self):
        data = hodge_summary(make_profile(8, [4, 4], [4, 4], [1] * 8))
        assert data.h21 == 2

    def test_no_degree_one_calabi_yau(self):
        with pytest.raises(ProfileError):
            hodge_summary(make_profile(1, [1], [1], [1]))

    def test_component_census(self):
        data = hodge_summary(quintic_mirror_profile())
        assert ("zero", 5, 52) in data.component_census
        assert ("infinity", 4, 1) in data.component_census
        assert ("infinity", 1, 31) in data.component_census

    def test_conditional_flag_for_ramified_quarter(self):
        data = hodge_summary(make_profile(5, [5], [4, 1], [2, 1, 1, 1]))
        assert data.conditional
        assert not data.smoothness.smooth

    def test_cross_check_runs_everywhere(self):
        for p in cy_profiles_with_pair(8):
            data = hodge_summary(p)
            assert data.euler % 2 == 0
            assert data.b3 >= 2
            assert isinstance(data, HodgeData)


def test_unavailable_marker():
    u = Unavailable("not computed")
    assert u.reason == "not computed"
