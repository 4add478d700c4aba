"""Ungleichungen rund um D_n: Fixpunkt-Intervall, mod-4-Fenster, Schrankenfamilie E/E2/E3/E4, Crossover-Suche."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Dict, Tuple

from arithmetic_structure import prop5_bound
from exact_core import HINT_DIGITS, PowerProduct, compare_power_products, compare_rational_to_power_product, factorial
from models import VARIANTS, BoundRow, OddPrimeSupport, SequenceTable, Variant, VariantChoice, WindowEvidence

DEFAULT_SCAN_LIMIT = 1_000_000

# veroeffentlichte Zahlenangaben, nur zur Gegenueberstellung mit dem exakten Urteil
PUBLISHED_BOUND_CLAIMS: Dict[Tuple[int, str, int], str] = {
    (1, "E", 10): "E(n) >= 2 for all n >= 10",
    (3, "E", 30): "(E(30))^2 >= 0.423",
    (3, "E", 31): "E(31) > 1, so D_n > 1 for n >= 31",
}


class CrossoverNotFoundError(RuntimeError):
    pass


def fixed_point_interval_check(c: int, n: int, x_n: Fraction) -> bool:
    """y_(n-1) < x_n < y_n, quadriert: 4(n-1)+c^2 < (2x_n-c)^2 < 4n+c^2."""
    if n < 1:
        raise ValueError(f"Intervallpruefung erst ab n=1, erhalten: {n}")
    shifted = 2 * x_n - c
    if shifted <= 0:
        raise ValueError(f"2x_n - c muss positiv sein, erhalten: {shifted}")
    square = shifted * shifted
    return 4 * (n - 1) + c * c < square < 4 * n + c * c


def first_interval_index(table: SequenceTable) -> int | None:
    """Kleinstes n >= 1, ab dem die Intervallpruefung bis n_max durchgehend gilt."""
    first: int | None = None
    for row in table.rows[1:]:
        if fixed_point_interval_check(table.c, row.n, row.x):
            if first is None:
                first = row.n
        else:
            first = None
    return first


def window_excludes_integer(c: int, n: int) -> WindowEvidence:
    if n < 1:
        raise ValueError(f"Fensterpruefung erst ab n=1, erhalten: {n}")
    lower = 4 * (n - 1) + c * c
    upper = 4 * n + c * c
    excluded = True
    t = math.isqrt(lower) + 1
    while t * t < upper:
        if t % 2 == c % 2:
            excluded = False
            break
        t += 1
    return WindowEvidence(n=n, c=c, lower=lower, upper=upper, excluded=excluded)


def lemma2_check(a_n: int, n: int) -> bool:
    return a_n * a_n >= factorial(n)


def default_threshold(c: int) -> Fraction:
    return Fraction(2) if c == 1 else Fraction(1)


def select_variant(c: int, support: OddPrimeSupport) -> Variant:
    if c == 1 or c == 3:
        return "E"
    if support.two_adic_exponent > 0:
        return "E2"
    if support.three_adic_exponent == 0 or support.three_adic_exponent >= 2:
        return "E3"
    return "E4"


def _resolve_variant(c: int, support: OddPrimeSupport, variant: VariantChoice | str) -> Variant:
    if variant == "auto":
        return select_variant(c, support)
    if variant not in VARIANTS:
        raise ValueError(f"Unbekannte Schrankenvariante: {variant}")
    return variant  # type: ignore[return-value]


def _odd_tail(n: int, j: int) -> PowerProduct:
    return PowerProduct.of([(2 * n - 3, Fraction(-j, 2))])


def bound_value(c: int, n: int, support: OddPrimeSupport, variant: Variant) -> PowerProduct:
    if n < 2:
        raise ValueError(f"Schranken erst ab n=2 definiert, erhalten: {n}")
    if variant == "E":
        return PowerProduct.from_rational(factorial(n - 1)) ** Fraction(1, 2) / prop5_bound(c, n, support)
    if variant == "E2":
        return PowerProduct.of([(c, Fraction(n, 2)), (2, Fraction(-n, 2))]) * _odd_tail(n, support.j)
    if variant == "E3":
        numerator = PowerProduct.of([(c, Fraction(3 * n, 4) - Fraction(1, 2)), (2, -(n - 1))])
        return numerator * _odd_tail(n, support.j)
    if variant == "E4":
        numerator = PowerProduct.of([(c, Fraction(3 * n, 5) - Fraction(1, 5)), (2, -(n - 1))])
        return numerator * _odd_tail(n, support.j)
    raise ValueError(f"Unbekannte Schrankenvariante: {variant}")


def denominator_lower_bound(
    c: int,
    n: int,
    support: OddPrimeSupport,
    variant: VariantChoice = "auto",
    threshold: Fraction | int = 1,
) -> BoundRow:
    chosen = _resolve_variant(c, support, variant)
    value = bound_value(c, n, support, chosen)
    return BoundRow(
        n=n,
        variant=chosen,
        value=value,
        threshold=Fraction(threshold),
        verdict_ge_threshold=compare_rational_to_power_product(threshold, value) != "GT",
        decimal_hint=value.decimal_hint(HINT_DIGITS),
        published_claim=PUBLISHED_BOUND_CLAIMS.get((c, chosen, n)),
    )


def bound_ratio(c: int, n: int, support: OddPrimeSupport, variant: VariantChoice) -> PowerProduct:
    """bound(n+1)/bound(n) in geschlossener Form."""
    chosen = _resolve_variant(c, support, variant)
    if n < 2:
        raise ValueError(f"Quotient erst ab n=2 definiert, erhalten: {n}")
    j = support.j
    tail = PowerProduct.of([(2 * n - 3, Fraction(j, 2)), (2 * n - 1, Fraction(-j, 2))])
    if chosen == "E":
        head = [(n, Fraction(1, 2)), (2, -1), *((p, Fraction(-1, p - 1)) for p in support.primes)]
    elif chosen == "E2":
        head = [(c, Fraction(1, 2)), (2, Fraction(-1, 2))]
    elif chosen == "E3":
        head = [(c, Fraction(3, 4)), (2, -1)]
    else:
        head = [(c, Fraction(3, 5)), (2, -1)]
    return PowerProduct.of(head) * tail


def _limit_ordering(c: int, support: OddPrimeSupport, variant: Variant) -> str | None:
    """Grenzwert des Quotienten fuer n -> oo verglichen mit 1; None fuer E (unbeschraenkt).

    Waechst die Variante nicht, wird sofort CrossoverNotFoundError geworfen.
    """
    if variant == "E":
        return None
    limit = {
        "E2": PowerProduct.of([(c, Fraction(1, 2)), (2, Fraction(-1, 2))]),
        "E3": PowerProduct.of([(c, Fraction(3, 4)), (2, -1)]),
        "E4": PowerProduct.of([(c, Fraction(3, 5)), (2, -1)]),
    }[variant]
    ordering = compare_power_products(limit, PowerProduct.one())
    if ordering == "LT" or (ordering == "EQ" and support.j > 0):
        raise CrossoverNotFoundError(f"Variante {variant} waechst fuer c={c} nicht; kein Crossover moeglich")
    return ordering


def crossover_index(
    c: int,
    support: OddPrimeSupport,
    threshold: Fraction | int,
    variant: VariantChoice = "auto",
    scan_limit: int = DEFAULT_SCAN_LIMIT,
) -> int:
    """Kleinstes n0 >= 2 mit bound(n0) >= threshold und Quotient(n0) >= 1.

    Der Quotient ist ein Produkt in n nicht fallender Faktoren, also gilt
    Quotient >= 1 und damit bound >= threshold fuer alle n >= n0.
    """
    if Fraction(threshold) < 1:
        raise ValueError(f"Schwelle muss >= 1 sein, erhalten: {threshold}")
    chosen = _resolve_variant(c, support, variant)
    if _limit_ordering(c, support, chosen) == "EQ":
        # j = 0: Quotient identisch 1, die Schranke bleibt bei bound(2)
        start = bound_value(c, 2, support, chosen)
        if compare_rational_to_power_product(threshold, start) == "GT":
            raise CrossoverNotFoundError(
                f"Variante {chosen} ist fuer c={c} konstant {start.decimal_hint(HINT_DIGITS)} < Schwelle {threshold}"
            )
    for n in range(2, scan_limit + 1):
        if compare_power_products(bound_ratio(c, n, support, chosen), PowerProduct.one()) == "LT":
            continue
        if compare_rational_to_power_product(threshold, bound_value(c, n, support, chosen)) != "GT":
            logging.debug("Crossover c=%d, Variante %s, Schwelle %s: n=%d", c, chosen, threshold, n)
            return n
    raise CrossoverNotFoundError(
        f"Kein Crossover fuer c={c} (Variante {chosen}, Schwelle {threshold}) bis n={scan_limit}; --scan-limit erhoehen"
    )


def chain_check(table: SequenceTable, n: int, support: OddPrimeSupport, variant: VariantChoice = "auto") -> bool:
    """D_n = a_(n-1)/d_n und D_n >= bound(n)."""
    row = table.row(n)
    if row.D is None or row.d is None or row.a_prev is None:
        raise ValueError(f"D_{n} ist nicht definiert")
    if row.D != row.a_prev // row.d:
        return False
    value = bound_value(table.c, n, support, _resolve_variant(table.c, support, variant))
    return compare_rational_to_power_product(row.D, value) != "LT"


def anchored_lower_bound(c: int, n: int, support: OddPrimeSupport, anchor_index: int, anchor_value: int) -> PowerProduct:
    """a_m * c^(n-1-m) / prop5_bound(n), gueltig wegen a_(k+1) >= c*a_k."""
    if anchor_value < 1:
        raise ValueError(f"Ankerwert muss >= 1 sein, erhalten: {anchor_value}")
    if n < max(2, anchor_index + 1):
        raise ValueError(f"Anker a_{anchor_index} traegt erst ab n={max(2, anchor_index + 1)}, erhalten: {n}")
    numerator = PowerProduct.of([(anchor_value, 1), (c, n - 1 - anchor_index)])
    return numerator / prop5_bound(c, n, support)


def first_index_exceeding(
    c: int,
    support: OddPrimeSupport,
    target: Fraction | int = 10**6,
    variant: VariantChoice = "E",
    scan_limit: int = DEFAULT_SCAN_LIMIT,
) -> int:
    chosen = _resolve_variant(c, support, variant)
    if _limit_ordering(c, support, chosen) == "EQ":
        start = bound_value(c, 2, support, chosen)
        if compare_rational_to_power_product(target, start) != "LT":
            raise CrossoverNotFoundError(f"Variante {chosen} ist fuer c={c} konstant und erreicht {target} nie")
    for n in range(2, scan_limit + 1):
        if compare_rational_to_power_product(target, bound_value(c, n, support, chosen)) == "LT":
            return n
    raise CrossoverNotFoundError(f"bound(n) > {target} fuer c={c} bis n={scan_limit} nicht erreicht")
