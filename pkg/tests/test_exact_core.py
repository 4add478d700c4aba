from fractions import Fraction

import pytest

from exact_core import (
    InvalidFractionError,
    PowerProduct,
    compare_power_products,
    compare_rational_to_power_product,
    factorial,
    gcd,
    make_rational,
    semifactorial,
)


@pytest.mark.parametrize(
    "num, den, expected",
    [(10, 4, Fraction(5, 2)), (655, 191, Fraction(655, 191)), (-3, -6, Fraction(1, 2))],
)
def test_make_rational_normalizes(num, den, expected):
    value = make_rational(num, den)
    assert value == expected
    assert value.denominator > 0


def test_make_rational_rejects_zero_denominator():
    with pytest.raises(InvalidFractionError):
        make_rational(1, 0)


def test_make_rational_is_scale_invariant():
    for k in (-7, -1, 2, 13):
        assert make_rational(38 * k, 13 * k) == make_rational(38, 13)


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(29) == 8841761993739701954543616000000


def test_semifactorial_values_and_recurrence():
    assert semifactorial(0) == 1
    assert semifactorial(3) == 15
    assert semifactorial(8) == 2027025
    for s in range(20):
        assert semifactorial(s + 1) == (2 * s + 1) * semifactorial(s)
        assert factorial(s + 1) == (s + 1) * factorial(s)


def test_gcd_known_values_and_zero_pair():
    assert gcd(36, 10) == 2
    assert gcd(7, 1) == 1
    assert gcd(138, 36) == 6
    with pytest.raises(ValueError):
        gcd(0, 0)


def test_power_product_merges_and_drops_trivial_factors():
    product = PowerProduct.of([(3, Fraction(1, 2)), (1, 5), (3, Fraction(1, 2)), (5, 0)])
    assert product.factors == ((3, Fraction(1)),)
    assert str(PowerProduct.one()) == "1"
    with pytest.raises(ValueError):
        PowerProduct.of({0: 1})


def test_compare_power_products_known_values():
    assert compare_power_products(PowerProduct.of({2: Fraction(3, 2)}), PowerProduct.of({3: 1})) == "LT"
    e12 = PowerProduct.of({factorial(11): Fraction(1, 2), 2: -11})
    assert compare_power_products(e12, PowerProduct.of({2: 1})) == "GT"
    # y_2 fuer c=1: (1 + sqrt(9))/2 = 2
    assert compare_power_products(PowerProduct.of({9: Fraction(1, 2)}), PowerProduct.of({3: 1})) == "EQ"


def test_exact_fallback_decides_equal_values_with_distinct_bases():
    lhs = PowerProduct.of({24: Fraction(1, 2)})
    rhs = PowerProduct.of({6: Fraction(1, 2), 2: 1})
    assert compare_power_products(lhs, rhs) == "EQ"
    assert compare_power_products(rhs, lhs) == "EQ"


def test_cleared_form_raises_to_exponent_lcm():
    product = PowerProduct.of({2: Fraction(1, 2), 3: Fraction(-1, 3)})
    assert product.cleared() == (6, 8, 9)


def test_compare_rational_to_power_product():
    assert compare_rational_to_power_product(Fraction(3, 2), PowerProduct.of({2: Fraction(1, 2)})) == "GT"
    assert compare_rational_to_power_product(1, PowerProduct.one()) == "EQ"


def test_decimal_hint_is_display_only():
    hint = PowerProduct.of({2: Fraction(1, 2)}).decimal_hint(10)
    assert hint.startswith("1.41421356")
