from fractions import Fraction

import pytest

from pell3.lagrange import (
    first_term_coefficient,
    first_term_series,
    inversion_coefficient,
    inversion_series,
    radius_estimate,
    truncation_bridge,
    verify_inversion,
)
from pell3.pell import R, recurrence_gen


class TestInversionSeries:
    def test_first_coefficients(self):
        assert inversion_coefficient(1) == Fraction(1, 4)
        assert inversion_coefficient(2) == Fraction(1, 16)
        assert inversion_coefficient(3) == Fraction(7, 256)

    def test_series_shape(self):
        u = inversion_series(5)
        assert u.coefficient(0) == 0
        assert all(u.coefficient(k) > 0 for k in range(1, 6))

    def test_index_bounds(self):
        with pytest.raises(ValueError):
            inversion_coefficient(0)
        with pytest.raises(ValueError):
            inversion_series(0)

    @pytest.mark.parametrize("order", [1, 8, 64])
    def test_composition_oracle(self, order):
        verify_inversion(order)


class TestFirstTermExpansion:
    def test_coefficient_formula_values(self):
        assert first_term_coefficient(0, 0) == Fraction(1, 2)
        assert first_term_coefficient(1, 0) == 1
        assert first_term_coefficient(5, 1) == -4

    @pytest.mark.parametrize("n", [0, 1, 2, 5, 10])
    def test_series_agrees_with_formula(self, n):
        # first_term_series raises IdentityViolationError on any mismatch
        ser = first_term_series(n, 16)
        assert ser.coefficient(0) == first_term_coefficient(n, 0)

    def test_series_keeps_going_past_the_polynomial(self):
        # beyond l = (n-1)/3 the expansion is nonzero: that tail is what
        # the conjugate Binet terms cancel
        ser = first_term_series(4, 8)
        assert any(ser.coefficient(l) != 0 for l in range(2, 8))


class TestTruncationBridge:
    @pytest.mark.parametrize("n", [1, 2, 4, 18, 30])
    def test_prefix_matches_polynomial(self, n):
        truncation_bridge(n)

    def test_sign_map_explicitly(self):
        poly = recurrence_gen(R, 18)
        ser = first_term_series(18, len(poly.coeffs))
        mapped = [(-1) ** l * ser.coefficient(l) for l in range(len(poly.coeffs))]
        assert mapped == list(poly.coeffs)

    def test_index_bound(self):
        with pytest.raises(ValueError):
            truncation_bridge(0)


class TestRadius:
    def test_ratio_near_target(self):
        assert abs(radius_estimate(60) - Fraction(27, 32)) < Fraction(5, 100)

    def test_positive_and_increasing(self):
        ratios = [radius_estimate(k) for k in range(10, 81)]
        assert all(r > 0 for r in ratios)
        assert all(a < b for a, b in zip(ratios, ratios[1:]))

    def test_below_limit(self):
        # ratios approach 27/32 from below
        assert radius_estimate(80) < Fraction(27, 32)

    def test_order_bound(self):
        with pytest.raises(ValueError):
            radius_estimate(9)
