"""Gegenueberstellung veroeffentlichter Zahlenangaben mit exakt berechneten Werten."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List

from bound_rules import PUBLISHED_BOUND_CLAIMS, anchored_lower_bound, bound_value, crossover_index
from exact_core import PowerProduct, compare_power_products, compare_rational_to_power_product
from models import Discrepancy, OddPrimeSupport

C1_CLAIMED_THRESHOLD_INDEX = 10
C3_CLAIMED_CROSSOVER = 31
C3_CLAIMED_SQUARE_AT_30 = Fraction(423, 1000)
C3_ANCHOR_INDEX = 15
C3_ANCHOR_VALUE = 4_685_949_792
C3_ENDGAME_FLOOR = Fraction(115, 100)


def lemma1_base_case(c: int, first_interval: int | None) -> Discrepancy | None:
    # (c + sqrt(4+c^2))/2 < c  <=>  sqrt(4+c^2) < c
    root = PowerProduct.from_rational(4 + c * c) ** Fraction(1, 2)
    if compare_rational_to_power_product(c, root) == "GT":
        return None
    first = "none within horizon" if first_interval is None else str(first_interval)
    return Discrepancy(
        claim_ref="lemma1-base-case",
        claimed="(c+sqrt(4+c^2))/2 < c",
        computed=f"false for c={c}: (c+sqrt(4+c^2))/2 > c; interval containment holds from n={first}",
    )


def c1_threshold(support: OddPrimeSupport) -> Discrepancy | None:
    exact = crossover_index(1, support, 2, "E")
    if exact == C1_CLAIMED_THRESHOLD_INDEX:
        return None
    return Discrepancy(
        claim_ref="c1-threshold",
        claimed=PUBLISHED_BOUND_CLAIMS[(1, "E", 10)],
        computed=f"E(n) >= 2 for all n >= {exact}; E({exact - 1}) < 2",
    )


def c3_square_at_30(support: OddPrimeSupport) -> Discrepancy | None:
    square = bound_value(3, 30, support, "E") ** 2
    if compare_rational_to_power_product(C3_CLAIMED_SQUARE_AT_30, square) != "GT":
        return None
    return Discrepancy(
        claim_ref="c3-square-at-30",
        claimed=PUBLISHED_BOUND_CLAIMS[(3, "E", 30)],
        computed=f"(E(30))^2 = 29!/(4^29*3^28*57) ~ {square.decimal_hint(6)} < 1",
    )


def c3_crossover(support: OddPrimeSupport) -> Discrepancy | None:
    exact = crossover_index(3, support, 1, "E")
    if exact == C3_CLAIMED_CROSSOVER:
        return None
    at_claim = bound_value(3, C3_CLAIMED_CROSSOVER, support, "E")
    return Discrepancy(
        claim_ref="c3-crossover",
        claimed=PUBLISHED_BOUND_CLAIMS[(3, "E", 31)],
        computed=f"least crossover with E(n) >= 1 is n={exact}; E(31) ~ {at_claim.decimal_hint(6)}",
    )


def c3_anchored_endgame(support: OddPrimeSupport) -> Discrepancy | None:
    failing = [
        n
        for n in range(C3_ANCHOR_INDEX + 1, C3_CLAIMED_CROSSOVER)
        if compare_power_products(
            anchored_lower_bound(3, n, support, C3_ANCHOR_INDEX, C3_ANCHOR_VALUE),
            PowerProduct.from_rational(C3_ENDGAME_FLOOR),
        )
        != "GT"
    ]
    if not failing:
        return None
    return Discrepancy(
        claim_ref="c3-anchored-endgame",
        claimed="D_n > 1.15 for 16 <= n <= 30",
        computed=f"anchored bound <= 1.15 at n={failing}",
    )


def collect_discrepancies(c: int, support: OddPrimeSupport, first_interval: int | None) -> List[Discrepancy]:
    checks = [lemma1_base_case(c, first_interval)]
    if c == 1:
        checks.append(c1_threshold(support))
    if c == 3:
        checks.extend([c3_square_at_30(support), c3_crossover(support), c3_anchored_endgame(support)])
    found = [item for item in checks if item is not None]
    for item in found:
        logging.info("Abweichung %s: behauptet '%s', berechnet '%s'", item.claim_ref, item.claimed, item.computed)
    return found
