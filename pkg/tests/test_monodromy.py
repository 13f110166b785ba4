from fractions import Fraction
from math import gcd

import pytest
import sympy

from k3cy.enumeration import infinity_partitions, partitions
from k3cy.monodromy import (
    POINT_INFINITY,
    POINT_QUARTER,
    POINT_ZERO,
    ExactMatrix,
    fixed_subspace_dim,
    h1_pullback,
    levelt_companion,
    r_value,
    relation_report,
    standard_system,
)
from k3cy.profile import is_calabi_yau_profile, make_profile, quintic_mirror_profile


def expand_root_product(roots):
    """Independent oracle: expand prod(t - root) symbolically over the complexes."""
    t = sympy.symbols("t")
    poly = sympy.Poly(sympy.expand(sympy.prod([t - r for r in roots])), t)
    return tuple(Fraction(str(c)) for c in poly.all_coeffs())


class TestExactMatrix:
    def test_rank_and_kernel(self):
        m = ExactMatrix([[1, 2], [2, 4]])
        assert m.rank() == 1
        assert m.kernel_dimension() == 1

    def test_inverse(self):
        m = ExactMatrix([[2, 1], [1, 1]])
        assert m * m.inverse() == ExactMatrix.identity(2)

    def test_singular_inverse(self):
        with pytest.raises(ValueError):
            ExactMatrix([[1, 1], [1, 1]]).inverse()

    def test_power_by_squaring(self):
        m = ExactMatrix([[1, 1], [0, 1]])
        assert (m**5).rows[0][1] == 5
        assert m**0 == ExactMatrix.identity(2)

    def test_fraction_entries_exact(self):
        m = ExactMatrix([[Fraction(1, 3), 1], [0, Fraction(1, 2)]])
        assert (m * m).rows[0][0] == Fraction(1, 9)

    def test_characteristic_polynomial_vs_sympy(self):
        m = ExactMatrix([[0, 0, -1], [1, 0, -1], [0, 1, -1]])
        sym = sympy.Matrix(m.to_lists()).charpoly().all_coeffs()
        assert list(m.characteristic_polynomial()) == [Fraction(str(c)) for c in sym]


class TestLeveltCompanion:
    def test_infinity_companion_matches_known_matrix(self):
        a, _ = levelt_companion(
            (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)), (1, 1, 1)
        )
        assert a == ExactMatrix(((0, 0, -1), (1, 0, -1), (0, 1, -1)))

    def test_char_poly_against_expansion_oracle(self):
        a, b = levelt_companion(
            (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)), (1, 1, 1)
        )
        # roots of unity e^{2 pi i /4}, e^{pi i}, e^{3 pi i /2} are I, -1, -I
        assert a.characteristic_polynomial() == expand_root_product(
            [sympy.I, -1, -sympy.I]
        )
        assert b.characteristic_polynomial() == expand_root_product([1, 1, 1])

    def test_double_unipotent(self):
        a, b = levelt_companion((1, 1), (1, 1))
        expected = expand_root_product([1, 1])
        assert a.characteristic_polynomial() == expected
        assert b.characteristic_polynomial() == expected

    def test_third_roots_need_conjugate_pairs(self):
        with pytest.raises(ValueError):
            levelt_companion((Fraction(1, 3), 1), (1, 1))

    def test_third_roots_in_pairs_accepted(self):
        a, _ = levelt_companion((Fraction(1, 3), Fraction(2, 3)), (1, 1))
        assert a.characteristic_polynomial() == (1, 1, 1)

    def test_unsupported_order(self):
        with pytest.raises(ValueError):
            levelt_companion((Fraction(1, 5),), (1,))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            levelt_companion((1, 1), (1,))


class TestStandardSystem:
    def test_printed_generators(self):
        system = standard_system()
        assert system.around_zero == ExactMatrix(((3, 1, 0), (-3, 0, 1), (1, 0, 0)))
        assert system.around_quarter == ExactMatrix(((1, 0, -4), (0, 1, 2), (0, 0, -1)))
        assert system.around_infinity == ExactMatrix(((0, 0, -1), (1, 0, -1), (0, 1, -1)))

    def test_relations(self):
        assert all(relation_report().values())

    def test_composition_order(self):
        s = standard_system()
        assert s.around_quarter * s.around_zero * s.around_infinity == ExactMatrix.identity(3)

    def test_traces_and_determinants(self):
        s = standard_system()
        assert s.around_zero.trace() == 3
        for g in (s.around_zero, s.around_quarter, s.around_infinity):
            # determinant is the constant coefficient of the char poly up to sign
            coeffs = g.characteristic_polynomial()
            assert coeffs[-1] in (1, -1)


class TestFixedSubspace:
    def test_identity(self):
        assert fixed_subspace_dim(ExactMatrix.identity(3)) == 3

    def test_quarter_generator(self):
        # involution conjugate to diag(-1, 1, 1)
        assert fixed_subspace_dim(standard_system().around_quarter) == 2

    def test_zero_generator(self):
        # single unipotent Jordan block of size 3
        assert fixed_subspace_dim(standard_system().around_zero) == 1

    def test_non_square(self):
        with pytest.raises(ValueError):
            fixed_subspace_dim(ExactMatrix([[1, 0, 0], [0, 1, 0]]))


class TestRValue:
    def test_spec_examples(self):
        assert r_value(POINT_INFINITY, 1) == 3
        assert r_value(POINT_QUARTER, 2) == 0
        assert r_value(POINT_ZERO, 7) == 2

    def test_closed_forms_for_all_indices(self):
        for index in range(1, 65):
            assert r_value(POINT_ZERO, index) == 2
            assert r_value(POINT_INFINITY, index) == 4 - gcd(index, 4)
            assert r_value(POINT_QUARTER, index) == 2 - gcd(index, 2)

    def test_bad_index(self):
        with pytest.raises(ValueError):
            r_value(POINT_ZERO, 0)

    def test_bad_point(self):
        with pytest.raises(ValueError):
            r_value("one", 1)


class TestH1Pullback:
    def test_identity_cover_is_extremal(self):
        # 2 + 3 + 1 - 2*3 = 0
        assert h1_pullback(make_profile(1, [1], [1], [1])) == 0

    def test_quintic_mirror(self):
        # 2 + (3 + 0) + 5*1 - 6 = 4, so h21 = (4 - 2)/2 = 1
        assert h1_pullback(quintic_mirror_profile()) == 4

    def test_all_even_quarter_parts(self):
        p = make_profile(8, [4, 4], [4, 4], [2, 2, 2, 2])
        k = len(p.over_zero)
        assert h1_pullback(p) == 2 + 2 * k - p.degree

    def test_closed_form_for_all_profiles(self):
        # general closed form, valid with no Calabi-Yau assumption
        for n in range(1, 7):
            for x in partitions(n):
                for y in partitions(n):
                    for z in partitions(n):
                        if len(x) + len(y) + len(z) - n - 2 < 0:
                            continue
                        p = make_profile(n, x, y, z)
                        closed = (
                            sum(4 - gcd(v, 4) for v in y)
                            + sum(2 - gcd(v, 2) for v in z)
                            + 2 * len(x)
                            - 6
                        )
                        assert h1_pullback(p) == closed

    def test_even_and_nonnegative_for_calabi_yau(self):
        for n in range(1, 9):
            for y in infinity_partitions(n):
                for x in partitions(n):
                    for z in partitions(n):
                        if len(x) + len(y) + len(z) - n - 2 < 0:
                            continue
                        p = make_profile(n, x, y, z)
                        assert is_calabi_yau_profile(p)[0]
                        value = h1_pullback(p)
                        assert value >= 2
                        assert (value - 2) % 2 == 0
