from fractions import Fraction

import pytest

from arithmetic_structure import odd_prime_support
from bound_rules import (
    CrossoverNotFoundError,
    anchored_lower_bound,
    bound_ratio,
    bound_value,
    chain_check,
    crossover_index,
    default_threshold,
    denominator_lower_bound,
    first_index_exceeding,
    first_interval_index,
    fixed_point_interval_check,
    lemma2_check,
    select_variant,
    window_excludes_integer,
)
from exact_core import PowerProduct, compare_power_products, compare_rational_to_power_product


def test_fixed_point_interval_known_values():
    assert fixed_point_interval_check(2, 4, Fraction(43, 14))
    assert not fixed_point_interval_check(1, 2, Fraction(2))
    assert fixed_point_interval_check(1, 4, Fraction(5, 2))
    with pytest.raises(ValueError):
        fixed_point_interval_check(4, 3, Fraction(2))


def test_first_interval_index(c1_table, long_tables):
    assert first_interval_index(c1_table) == 4
    for c, table in long_tables.items():
        assert first_interval_index(table) == (4 if c == 1 else 2)


@pytest.mark.parametrize("c, n, lower, upper", [(1, 5, 17, 21), (2, 10, 40, 44)])
def test_window_known_values(c, n, lower, upper):
    evidence = window_excludes_integer(c, n)
    assert (evidence.lower, evidence.upper, evidence.excluded) == (lower, upper, True)


def test_window_always_excluded():
    for c in range(1, 21):
        assert all(window_excludes_integer(c, n).excluded for n in range(1, 10_001))


def test_lemma2_known_values():
    assert lemma2_check(1, 0)
    assert lemma2_check(10, 4)
    assert lemma2_check(4_685_949_792, 15)
    assert not lemma2_check(1, 3)


@pytest.mark.parametrize(
    "c, expected",
    [(1, "E"), (3, "E"), (2, "E2"), (6, "E2"), (5, "E3"), (35, "E3"), (9, "E3"), (15, "E4"), (21, "E4")],
)
def test_select_variant(c, expected):
    assert select_variant(c, odd_prime_support(c)) == expected


def test_default_threshold():
    assert default_threshold(1) == 2
    assert default_threshold(7) == 1


def test_c1_bound_rows_around_threshold():
    support = odd_prime_support(1)
    row12 = denominator_lower_bound(1, 12, support, "E", 2)
    assert row12.verdict_ge_threshold
    assert row12.decimal_hint.startswith("3.08")
    row11 = denominator_lower_bound(1, 11, support, "E", 2)
    assert not row11.verdict_ge_threshold
    assert row11.decimal_hint.startswith("1.86")
    assert denominator_lower_bound(1, 10, support, "E", 2).published_claim == "E(n) >= 2 for all n >= 10"


def test_e2_at_start_is_half_c():
    row = denominator_lower_bound(6, 2, odd_prime_support(6), "E2", 1)
    assert compare_rational_to_power_product(3, row.value) == "EQ"
    assert row.verdict_ge_threshold


def test_c3_square_at_30_is_below_one():
    support = odd_prime_support(3)
    square = bound_value(3, 30, support, "E") ** 2
    assert compare_rational_to_power_product(1, square) == "GT"
    assert square.decimal_hint(6).startswith("0.0235")


def test_bound_rejects_small_n():
    with pytest.raises(ValueError):
        denominator_lower_bound(3, 1, odd_prime_support(3))


def test_bound_ratio_known_values():
    support3 = odd_prime_support(3)
    ratio = bound_ratio(3, 30, support3, "E")
    assert compare_power_products(ratio**2, PowerProduct.from_rational(Fraction(1710, 708))) == "EQ"
    assert compare_power_products(bound_ratio(1, 4, odd_prime_support(1), "E"), PowerProduct.one()) == "EQ"
    support6 = odd_prime_support(6)
    assert all(compare_power_products(bound_ratio(6, n, support6, "E2"), PowerProduct.one()) != "LT" for n in range(2, 60))


@pytest.mark.parametrize("c, variant", [(1, "E"), (3, "E"), (6, "E2"), (5, "E3"), (15, "E4")])
def test_bound_ratio_matches_quotient(c, variant):
    support = odd_prime_support(c)
    for n in range(2, 25):
        quotient = bound_value(c, n + 1, support, variant) / bound_value(c, n, support, variant)
        assert compare_power_products(bound_ratio(c, n, support, variant), quotient) == "EQ"


def test_crossover_known_values():
    assert crossover_index(1, odd_prime_support(1), 2, "E") == 12
    assert crossover_index(2, odd_prime_support(2), 1, "E2") == 2
    assert crossover_index(3, odd_prime_support(3), 1, "E") == 35


def test_crossover_tail_holds_beyond_index():
    support = odd_prime_support(3)
    for n in (35, 36, 41, 57, 120, 349):
        assert denominator_lower_bound(3, n, support, "E", 1).verdict_ge_threshold
    assert not denominator_lower_bound(3, 34, support, "E", 1).verdict_ge_threshold


def test_crossover_errors():
    with pytest.raises(ValueError):
        crossover_index(3, odd_prime_support(3), Fraction(1, 2))
    with pytest.raises(CrossoverNotFoundError):
        crossover_index(3, odd_prime_support(3), 1, "E", scan_limit=34)
    with pytest.raises(CrossoverNotFoundError):
        crossover_index(1, odd_prime_support(1), 1, "E2")


def test_constant_bound_stops_without_scanning():
    support = odd_prime_support(2)
    with pytest.raises(CrossoverNotFoundError, match="konstant"):
        crossover_index(2, support, 2, "E2")
    with pytest.raises(CrossoverNotFoundError, match="konstant"):
        first_index_exceeding(2, support, 10, "E2")
    assert crossover_index(2, support, 1, "E2", scan_limit=2) == 2


def test_chain_check_over_table(long_tables):
    for c in range(1, 21):
        support = odd_prime_support(c)
        assert all(chain_check(long_tables[c], n, support) for n in range(2, 201))


def test_anchored_endgame_for_c3():
    support = odd_prime_support(3)
    floor = PowerProduct.from_rational(Fraction(115, 100))
    for n in range(16, 31):
        value = anchored_lower_bound(3, n, support, 15, 4_685_949_792)
        assert compare_power_products(value, floor) == "GT"
    with pytest.raises(ValueError):
        anchored_lower_bound(3, 15, support, 15, 4_685_949_792)


def test_e_grows_past_a_million():
    for c in (1, 3, 7, 20):
        support = odd_prime_support(c)
        n = first_index_exceeding(c, support)
        assert compare_rational_to_power_product(10**6, bound_value(c, n, support, "E")) == "LT"
        assert compare_rational_to_power_product(10**6, bound_value(c, n - 1, support, "E")) != "LT"
