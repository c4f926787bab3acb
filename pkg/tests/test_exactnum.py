from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pell3.exactnum import FieldMismatchError, QuadExt, gen_binomial


class TestGenBinomial:
    @pytest.mark.parametrize(
        "m, k, expected",
        [
            (5, 2, 10),
            (-1, 3, -1),
            (-2, 3, -4),  # (-2)(-3)(-4)/6
            (0, 0, 1),
            (5, 7, 0),
            (3, 0, 1),
            (-5, 0, 1),
            (-3, 4, 15),
        ],
    )
    def test_values(self, m, k, expected):
        assert gen_binomial(m, k) == expected

    def test_negative_lower_index_rejected(self):
        with pytest.raises(ValueError):
            gen_binomial(5, -1)

    def test_negation_of_upper_index(self):
        # the sign bridge between the series expansion and the closed form
        for n in range(31):
            for l in range(41):
                assert gen_binomial(3 * l - n, l) == (-1) ** l * gen_binomial(
                    n - 2 * l - 1, l
                )

    @given(st.integers(-40, 40), st.integers(0, 12))
    def test_pascal_rule(self, m, k):
        assert gen_binomial(m, k) + gen_binomial(m, k + 1) == gen_binomial(m + 1, k + 1)


small_fractions = st.fractions(
    min_value=-5, max_value=5, max_denominator=12
)


def quad_elements(d):
    return st.builds(lambda a, b: QuadExt(a, b, d), small_fractions, small_fractions)


class TestQuadExt:
    def test_norm_product(self):
        e = QuadExt(1, 1, 5) * QuadExt(1, -1, 5)
        assert e == QuadExt(-4, 0, 5)
        assert e == -4

    def test_conjugate(self):
        e = QuadExt(Fraction(2, 3), Fraction(-1, 7), 5)
        assert e.conjugate() == QuadExt(Fraction(2, 3), Fraction(1, 7), 5)

    def test_w_squared_is_d(self):
        assert QuadExt(0, 1, 5) ** 2 == QuadExt(5, 0, 5)

    def test_mismatched_discriminants(self):
        with pytest.raises(FieldMismatchError):
            QuadExt(1, 1, 5) + QuadExt(1, 1, 7)
        with pytest.raises(FieldMismatchError):
            QuadExt(1, 1, 5) * QuadExt(1, 1, 7)
        with pytest.raises(FieldMismatchError):
            QuadExt(1, 1, 5) / QuadExt(1, 1, 7)

    def test_division(self):
        e = QuadExt(3, Fraction(1, 2), 5)
        assert e / e == 1
        assert (1 / e) * e == 1

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            QuadExt(1, 0, 5) / QuadExt(0, 0, 5)

    def test_division_by_zero_norm(self):
        # with a square discriminant the ring has zero divisors
        with pytest.raises(ZeroDivisionError):
            QuadExt(1, 0, 4) / QuadExt(2, 1, 4)

    def test_scalar_mixing(self):
        e = QuadExt(1, 2, 5)
        assert 2 * e == QuadExt(2, 4, 5)
        assert e + Fraction(1, 2) == QuadExt(Fraction(3, 2), 2, 5)
        assert 1 - e == QuadExt(0, -2, 5)

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            QuadExt(1, 1, 5) ** -1

    @given(quad_elements(5), quad_elements(5))
    def test_conjugation_is_multiplicative(self, e, f):
        assert (e * f).conjugate() == e.conjugate() * f.conjugate()

    @given(quad_elements(Fraction(21, 4)), st.integers(0, 8), st.integers(0, 8))
    def test_pow_is_additive(self, e, m, n):
        assert e ** (m + n) == e**m * e**n

    @given(quad_elements(5), quad_elements(5), quad_elements(5))
    def test_ring_laws(self, e, f, g):
        assert e * f == f * e
        assert e * (f + g) == e * f + e * g
