import itertools
import random

import pytest

from k3cy.enumeration import partitions
from k3cy.hurwitz import (
    FOUND,
    INCONCLUSIVE,
    NOT_FOUND,
    CoverWitness,
    Permutation,
    WitnessError,
    all_transpositions,
    canonical_of_cycle_type,
    cycle_type_class_size,
    deformation_dimension,
    find_cover,
    group_is_transitive,
    min_transposition_factorization,
    parse_cycles,
    permutations_of_cycle_type,
    simplify_to_simple,
)
from k3cy.profile import make_profile, quintic_mirror_profile


class TestPermutation:
    def test_left_to_right_composition(self):
        p = parse_cycles("(1 2)", 3)
        q = parse_cycles("(1 3)", 3)
        # apply p first, then q
        assert (p * q)(1) == q(p(1)) == 3
        assert (p * q).cycle_type() == (3,)

    def test_cycle_factorization_convention(self):
        # (1 2)(1 3) applied left to right equals the 3-cycle (1 2 3)
        product = parse_cycles("(1 2)", 3) * parse_cycles("(1 3)", 3)
        assert product == parse_cycles("(1 2 3)")

    def test_inverse(self):
        g = parse_cycles("(1 2 3)(4 5)")
        assert g * g.inverse() == Permutation.identity(5)

    def test_cycle_type_includes_fixed_points(self):
        assert parse_cycles("(1 4)", 5).cycle_type() == (2, 1, 1, 1)

    def test_not_a_bijection(self):
        with pytest.raises(ValueError):
            Permutation([1, 1, 3])

    def test_parse_identity(self):
        assert parse_cycles("()", 4) == Permutation.identity(4)

    def test_transposition_detection(self):
        assert parse_cycles("(2 5)", 5).is_transposition()
        assert not parse_cycles("(1 2 3)", 5).is_transposition()
        assert not Permutation.identity(3).is_transposition()


class TestCycleTypeEnumeration:
    def test_counts_match_class_size(self):
        for n in range(1, 7):
            for parts in partitions(n):
                count = sum(1 for _ in permutations_of_cycle_type(n, parts))
                assert count == cycle_type_class_size(n, parts)

    def test_matches_brute_force_filter(self):
        for n in range(1, 6):
            for parts in partitions(n):
                mine = set(permutations_of_cycle_type(n, parts))
                brute = {
                    Permutation(p)
                    for p in itertools.permutations(range(1, n + 1))
                    if Permutation(p).cycle_type() == parts
                }
                assert mine == brute

    def test_each_exactly_once(self):
        seen = list(permutations_of_cycle_type(6, (3, 2, 1)))
        assert len(seen) == len(set(seen))

    def test_canonical_representative(self):
        g = canonical_of_cycle_type(5, (4, 1))
        assert g == parse_cycles("(1 2 3 4)", 5)


class TestMinFactorization:
    def test_identity(self):
        assert min_transposition_factorization(Permutation.identity(4)) == []

    def test_transposition(self):
        g = parse_cycles("(1 2)", 2)
        assert min_transposition_factorization(g) == [g]

    def test_three_cycle(self):
        g = parse_cycles("(1 2 3)")
        factors = min_transposition_factorization(g)
        assert [f.moved_points() for f in factors] == [(1, 2), (1, 3)]

    def test_product_reconstructs(self):
        rng = random.Random(7)
        for _ in range(500):
            n = rng.randint(1, 12)
            image = list(range(1, n + 1))
            rng.shuffle(image)
            g = Permutation(image)
            factors = min_transposition_factorization(g)
            assert len(factors) == n - g.num_cycles()
            product = Permutation.identity(n)
            for f in factors:
                product = product * f
            assert product == g

    def test_optimal_length_by_cayley_distance(self):
        # breadth-first search in the transposition Cayley graph of S_6
        n = 6
        start = Permutation.identity(n)
        generators = all_transpositions(n)
        distance = {start: 0}
        frontier = [start]
        while frontier:
            nxt = []
            for g in frontier:
                for t in generators:
                    h = g * t
                    if h not in distance:
                        distance[h] = distance[g] + 1
                        nxt.append(h)
            frontier = nxt
        assert len(distance) == 720
        for g, d in distance.items():
            assert d == n - g.num_cycles()
            assert len(min_transposition_factorization(g)) == d


class TestFindCover:
    def test_quintic_mirror_witness(self):
        profile = quintic_mirror_profile()
        result = find_cover(profile)
        assert result.status == FOUND
        result.witness.verify(profile)

    def test_nonexistence_certified(self):
        # two (2,2) elements multiply into the Klein four-group, never a 3-cycle
        result = find_cover(make_profile(4, [2, 2], [2, 2], [3, 1]))
        assert result.status == NOT_FOUND

    def test_trivial_cover(self):
        result = find_cover(make_profile(1, [1], [1], [1]))
        assert result.status == FOUND
        assert result.witness.extra == ()

    def test_budget_exhaustion(self):
        profile = make_profile(8, [3, 1, 1, 1, 1, 1], [8], [4, 2, 1, 1])
        result = find_cover(profile, budget=10)
        assert result.status == INCONCLUSIVE
        assert result.witness is None

    def test_degree_cap(self):
        with pytest.raises(ValueError):
            find_cover(make_profile(13, [13], [8, 4, 1], [1] * 13))

    def test_bad_budget(self):
        with pytest.raises(ValueError):
            find_cover(quintic_mirror_profile(), budget=0)

    def test_deterministic(self):
        profile = make_profile(6, [6], [4, 2], [2, 2, 1, 1])
        first = find_cover(profile)
        second = find_cover(profile)
        assert first == second

    def test_riemann_hurwitz_audit(self):
        for profile in (
            quintic_mirror_profile(),
            make_profile(6, [6], [4, 2], [1] * 6),
            make_profile(8, [4, 4], [4, 4], [1] * 8),
            make_profile(4, [2, 2], [2, 2], [1, 1, 1, 1]),
        ):
            witness = find_cover(profile).witness
            n = profile.degree
            total = sum(n - g.num_cycles() for g in witness.entries())
            assert total == 2 * n - 2


def naive_cover_exists(profile, fix_zero=False):
    """Full tuple enumeration; independent of the search implementation."""
    n = profile.degree
    r = profile.extra_ramification
    everyone = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    of_type = lambda t: [g for g in everyone if g.cycle_type() == t]
    zeros = (
        [canonical_of_cycle_type(n, profile.over_zero)]
        if fix_zero
        else of_type(profile.over_zero)
    )
    transpositions = [g for g in everyone if g.is_transposition()]
    for sz in zeros:
        for sq in of_type(profile.over_quarter):
            base_zq = sz * sq
            for si in of_type(profile.over_infinity):
                base = base_zq * si
                if r == 0:
                    if base.is_identity() and group_is_transitive(n, (sz, sq, si)):
                        return True
                    continue
                for prefix in itertools.product(transpositions, repeat=r - 1):
                    product = base
                    for t in prefix:
                        product = product * t
                    last = product.inverse()
                    if not last.is_transposition():
                        continue
                    if group_is_transitive(n, (sz, sq, si) + prefix + (last,)):
                        return True
    return False


class TestOracleEquivalence:
    def test_all_profiles_up_to_degree_four(self):
        for n in range(1, 5):
            for x in partitions(n):
                for y in partitions(n):
                    for z in partitions(n):
                        if len(x) + len(y) + len(z) - n - 2 < 0:
                            continue
                        profile = make_profile(n, x, y, z)
                        expected = naive_cover_exists(profile)
                        result = find_cover(profile)
                        assert result.status in (FOUND, NOT_FOUND)
                        assert (result.status == FOUND) == expected, profile

    def test_selected_degree_five_profiles(self):
        # conjugating a witness fixes the zero entry, so the reduced oracle
        # (validated against the full one for n <= 4) is still exhaustive
        cases = [
            (5, [5], [4, 1], [1] * 5),
            (5, [5], [5], [1] * 5),
            (5, [2, 2, 1], [2, 2, 1], [5]),
            (5, [3, 1, 1], [2, 2, 1], [4, 1]),
            (5, [4, 1], [3, 1, 1], [2, 1, 1, 1]),
            (5, [5], [3, 2], [2, 2, 1]),
        ]
        for case in cases:
            profile = make_profile(*case)
            expected = naive_cover_exists(profile, fix_zero=True)
            result = find_cover(profile)
            assert (result.status == FOUND) == expected, profile


class TestWitnessVerification:
    def test_rejects_wrong_cycle_type(self):
        profile = quintic_mirror_profile()
        witness = find_cover(profile).witness
        tampered = CoverWitness(
            witness.over_zero,
            parse_cycles("(1 2)", 5),
            witness.over_infinity,
            witness.extra,
        )
        with pytest.raises(WitnessError):
            tampered.verify(profile)

    def test_rejects_broken_product(self):
        profile = quintic_mirror_profile()
        witness = find_cover(profile).witness
        tampered = CoverWitness(
            witness.over_zero,
            witness.over_quarter,
            witness.over_infinity,
            (parse_cycles("(1 2)", 5),),
        )
        with pytest.raises(WitnessError):
            tampered.verify(profile)

    def test_rejects_intransitive(self):
        # the disconnected double cover: all entries trivial on 2 points
        intransitive = CoverWitness(
            Permutation.identity(2), Permutation.identity(2), Permutation.identity(2), ()
        )
        with pytest.raises(WitnessError) as err:
            intransitive.verify(make_profile(2, [1, 1], [1, 1], [1, 1]))
        assert "transitive" in str(err.value)

    def test_accepts_connected_double_cover(self):
        swap = parse_cycles("(1 2)", 2)
        witness = CoverWitness(Permutation.identity(2), swap, swap, ())
        witness.verify(make_profile(2, [1, 1], [2], [2]))


class TestSimplifyToSimple:
    def test_three_cycle_extra(self):
        witness = CoverWitness(
            parse_cycles("(1 2 3)"),
            Permutation.identity(3),
            Permutation.identity(3),
            (parse_cycles("(1 3 2)"),),
        )
        simple = simplify_to_simple(witness)
        assert [g.moved_points() for g in simple.extra] == [(1, 3), (1, 2)]
        assert simple.product().is_identity()
        assert simple.is_transitive()

    def test_already_simple_unchanged(self):
        profile = quintic_mirror_profile()
        witness = find_cover(profile).witness
        assert simplify_to_simple(witness) == witness

    def test_double_transposition_extra(self):
        g = parse_cycles("(1 2)(3 4)")
        witness = CoverWitness(
            g, Permutation.identity(4), Permutation.identity(4), (g.inverse(),)
        )
        simple = simplify_to_simple(witness)
        assert len(simple.extra) == 2
        assert all(t.is_transposition() for t in simple.extra)
        assert simple.product().is_identity()


class TestDeformationDimension:
    def test_quintic_mirror(self):
        assert deformation_dimension(quintic_mirror_profile()) == 1

    def test_two_directions(self):
        assert deformation_dimension(make_profile(8, [4, 4], [4, 4], [1] * 8)) == 2

    def test_degree_two(self):
        assert deformation_dimension(make_profile(2, [2], [1, 1], [1, 1])) == 1

    def test_requires_unramified_quarter(self):
        with pytest.raises(ValueError):
            deformation_dimension(make_profile(5, [5], [4, 1], [2, 1, 1, 1]))

    def test_requires_two_infinity_points(self):
        with pytest.raises(ValueError):
            deformation_dimension(make_profile(8, [8], [8], [1] * 8))

    def test_requires_calabi_yau(self):
        with pytest.raises(ValueError):
            deformation_dimension(make_profile(3, [3], [3], [1, 1, 1]))
