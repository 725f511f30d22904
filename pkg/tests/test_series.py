import pytest

from magic3 import (
    DivisibilityError,
    RationalSeries,
    count_closed,
    count_families,
    expand,
    magic_gf,
    poly_mul,
)

EXPECTED_PREFIX = [0, 0, 0, 0, 8, 24, 32, 56, 80, 104, 136, 176, 208]


class TestExpand:
    def test_known_prefix(self):
        assert expand(magic_gf(), 13) == EXPECTED_PREFIX

    def test_geometric_series(self):
        geometric = RationalSeries(numerator=(1,), denominator=(1, -1))
        assert expand(geometric, 4) == [1, 1, 1, 1]

    def test_cancellation_to_one(self):
        one = RationalSeries(numerator=(1, -1), denominator=(1, -1))
        assert expand(one, 3) == [1, 0, 0]

    def test_denominator_must_be_unital(self):
        with pytest.raises(ValueError):
            RationalSeries(numerator=(1,), denominator=(2, 1))

    def test_product_of_denominator_and_expansion_is_numerator(self):
        gf = magic_gf()
        coeffs = tuple(expand(gf, 101))
        product = poly_mul(gf.denominator, coeffs)[:101]
        padded = gf.numerator + (0,) * (101 - len(gf.numerator))
        assert product == padded


class TestMagicGf:
    def test_numerator_coefficients(self):
        assert magic_gf().numerator == (0, 0, 0, 0, 8, 16)

    def test_denominator_degree_and_shape(self):
        den = magic_gf().denominator
        assert len(den) - 1 == 6
        # independently recomputed convolution of (1-t)(1-t^2)(1-t^3)
        step1 = [0, 0, 0, 0]
        for i, a in enumerate((1, -1)):
            for j, b in enumerate((1, 0, -1)):
                step1[i + j] += a * b
        step2 = [0] * 7
        for i, a in enumerate(step1):
            for j, b in enumerate((1, 0, 0, -1)):
                step2[i + j] += a * b
        assert den == tuple(step2)


class TestClosedForm:
    @pytest.mark.parametrize("s, expected", [(0, 0), (1, 0), (2, 0), (3, 0), (4, 8), (8, 80)])
    def test_pinned_values(self, s, expected):
        assert count_closed(s) == expected

    def test_rejects_negative_parameter(self):
        with pytest.raises(ValueError):
            count_closed(-1)

    def test_agrees_with_series_to_one_thousand(self):
        coeffs = expand(magic_gf(), 1001)
        for s in range(1001):
            assert count_closed(s) == coeffs[s]

    def test_agrees_with_family_enumeration(self):
        for s in range(0, 26):
            assert count_closed(s) == count_families(s)

    def test_every_count_is_a_multiple_of_eight(self):
        for s in range(1001):
            assert count_closed(s) % 8 == 0

    def test_quadratic_on_every_residue_class_mod_six(self):
        # each class has constant second differences, i.e. a degree-2 polynomial
        for residue in range(6):
            values = [count_closed(s) for s in range(residue, 1001, 6)]
            second = [
                values[n + 2] - 2 * values[n + 1] + values[n]
                for n in range(len(values) - 2)
            ]
            assert len(set(second)) == 1

    def test_divisibility_guard_exists(self):
        assert issubclass(DivisibilityError, Exception)
