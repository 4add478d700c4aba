from __future__ import annotations

import logging
from fractions import Fraction

from arithmetic_structure import (
    d_bound_holds,
    is_prime,
    lemma3_check,
    odd_prime_support,
    p_adic_valuation,
    prop5_bound,
    semifactorial_valuation_bound,
    support_check,
)
from bound_rules import (
    bound_ratio,
    bound_value,
    chain_check,
    first_interval_index,
    fixed_point_interval_check,
    select_variant,
    window_excludes_integer,
)
from egf_series import (
    alternating_convolution,
    cauchy_residual,
    coefficients_to_a,
    convolution_target,
    egf,
    exp_x_squared,
    series_mul,
)
from exact_core import compare_power_products, semifactorial
from models import OddPrimeSupport, SequenceTable
from sequence_engine import a_closed_form, build_table, divisibility_chain_holds, quadratic_in_window, reduced_denominator
from services.contracts import CertifySettings, VerifySummary

C1_PUBLISHED_ORBIT = [
    Fraction(1),
    Fraction(1),
    Fraction(2),
    Fraction(2),
    Fraction(5, 2),
    Fraction(13, 5),
    Fraction(38, 13),
    Fraction(58, 19),
    Fraction(191, 58),
    Fraction(655, 191),
]
C3_PUBLISHED_A15 = 4_685_949_792
LEMMA3_PRIME_CEILING = 97
VALUATION_PRIME_CEILING = 50


class VerifyService:
    def __init__(self, settings: CertifySettings | None = None) -> None:
        self.settings = settings or CertifySettings()

    def verify_suite(self, c_from: int, c_to: int, n_max: int) -> VerifySummary:
        """Alle Invarianten fuer c_from..c_to.

        Tabelle, Reihe und Schranken laufen bis n_max; Fensterausschluss, Intervall,
        Quadratfenster, a_n^2 >= n!, Teilersupport und Kongruenz laufen mindestens ueber
        die festen Gitter aus den Einstellungen.
        """
        if c_from < 1 or c_to < c_from:
            raise ValueError(f"Ungueltiger Bereich fuer c: {c_from}..{c_to}")
        if n_max < 1:
            raise ValueError(f"n_max muss >= 1 sein, erhalten: {n_max}")
        grids = {
            "window": max(n_max, self.settings.window_grid),
            "interval": max(n_max, self.settings.interval_grid),
            "congruence": max(n_max, self.settings.congruence_grid),
        }
        summary = VerifySummary(c_from=c_from, c_to=c_to, n_max=n_max, grids=grids)
        self._check_valuations(summary, n_max)
        for c in range(c_from, c_to + 1):
            long_table = build_table(c, max(grids["interval"], grids["congruence"]))
            table = SequenceTable(c=c, rows=long_table.rows[: n_max + 1])
            support = odd_prime_support(c, self.settings.factor_limit)
            self._check_sequence(summary, table)
            self._check_series(summary, table)
            self._check_arithmetic(summary, table, support)
            self._check_bounds(summary, table, support)
            self._check_congruence(summary, long_table, support, grids["congruence"])
            self._check_windows(summary, c, grids["window"])
            self._check_interval(summary, long_table, grids["interval"])
            self._check_anchors(summary, table)
        for tally in summary.tallies.values():
            if tally.failed:
                logging.error("%s: %d von %d Pruefungen fehlgeschlagen (%s)", tally.name, tally.failed, tally.checked, tally.first_failure)
        logging.info("Verifikation c=%d..%d, n<=%d: %s", c_from, c_to, n_max, "bestanden" if summary.passed else "fehlgeschlagen")
        return summary

    def _check_valuations(self, summary: VerifySummary, n_max: int) -> None:
        tally = summary.tally("semifactorial_valuation")
        odd_primes = [p for p in range(3, VALUATION_PRIME_CEILING + 1) if is_prime(p)]
        for n in range(1, n_max + 1):
            value = semifactorial(n)
            for p in odd_primes:
                bound = semifactorial_valuation_bound(p, n)
                tally.record(bound.m == p_adic_valuation(value, p), f"p={p}, n={n}: m={bound.m}")

    def _check_sequence(self, summary: VerifySummary, table: SequenceTable) -> None:
        c = table.c
        closed = summary.tally("closed_form")
        identity = summary.tally("fraction_identity")
        growth = summary.tally("growth")
        for row in table.rows:
            n = row.n
            closed.record(row.a == a_closed_form(c, n), f"c={c}, n={n}")
            if n >= 1:
                try:
                    reduced_denominator(table, n)
                    ok = row.x == Fraction(row.a // row.d, row.a_prev // row.d)
                except RuntimeError:
                    ok = False
                identity.record(ok, f"c={c}, n={n}")
            if c >= 2 and 1 <= n < table.n_max:
                growth.record(table.rows[n + 1].a > row.a, f"c={c}, n={n}")
        summary.tally("divisibility_chain").record(divisibility_chain_holds(table), f"c={c}")

    def _check_series(self, summary: VerifySummary, table: SequenceTable) -> None:
        c = table.c
        order = table.n_max
        series = egf(c, order)
        summary.tally("egf_coefficients").record(coefficients_to_a(series) == table.a_values(), f"c={c}")
        if order >= 2:
            summary.tally("cauchy_residual").record(cauchy_residual(series, c).is_zero(), f"c={c}")
        product = series_mul(series, series.reflect())
        summary.tally("product_identity").record(product == exp_x_squared(order), f"c={c}")
        convolution = summary.tally("alternating_convolution")
        a = table.a_values()
        for n in range(1, order // 2 + 1):
            convolution.record(alternating_convolution(a, n) == convolution_target(n), f"c={c}, n={n}")

    def _check_arithmetic(self, summary: VerifySummary, table: SequenceTable, support: OddPrimeSupport) -> None:
        c = table.c
        prop5 = summary.tally("prop5_bound")
        for row in table.rows[2:]:
            assert row.d is not None
            prop5.record(d_bound_holds(row.d, prop5_bound(c, row.n, support)), f"c={c}, n={row.n}")

    def _check_bounds(self, summary: VerifySummary, table: SequenceTable, support: OddPrimeSupport) -> None:
        c = table.c
        variant = select_variant(c, support)
        chain = summary.tally("denominator_chain")
        ratio = summary.tally("bound_ratio")
        for n in range(2, table.n_max + 1):
            chain.record(chain_check(table, n, support, variant), f"c={c}, n={n}")
            if n < table.n_max:
                quotient = bound_value(c, n + 1, support, variant) / bound_value(c, n, support, variant)
                same = compare_power_products(bound_ratio(c, n, support, variant), quotient) == "EQ"
                ratio.record(same, f"c={c}, n={n}")

    def _check_congruence(self, summary: VerifySummary, table: SequenceTable, support: OddPrimeSupport, grid: int) -> None:
        c = table.c
        corollary = summary.tally("gcd_support")
        for row in table.rows[1 : grid + 1]:
            assert row.d is not None
            corollary.record(support_check(row.d, support), f"c={c}, n={row.n}, d={row.d}")
        congruence = summary.tally("lemma3_congruence")
        for p in range(3, min(LEMMA3_PRIME_CEILING, grid) + 1, 2):
            if not is_prime(p):
                continue
            for n in range(p, grid + 1, p):
                congruence.record(lemma3_check(c, p, n, table.rows[n].a), f"c={c}, p={p}, n={n}")

    def _check_windows(self, summary: VerifySummary, c: int, grid: int) -> None:
        windows = summary.tally("window_exclusion")
        for n in range(1, grid + 1):
            windows.record(window_excludes_integer(c, n).excluded, f"c={c}, n={n}")

    def _check_interval(self, summary: VerifySummary, table: SequenceTable, grid: int) -> None:
        c = table.c
        lemma2 = summary.tally("lemma2")
        window = summary.tally("quadratic_window")
        interval = summary.tally("interval_containment")
        window_start = 4 if c == 1 else 2
        factorial_n = 1
        for row in table.rows[: grid + 1]:
            n = row.n
            factorial_n *= max(n, 1)
            lemma2.record(row.a * row.a >= factorial_n, f"c={c}, n={n}")
            if n >= window_start:
                window.record(quadratic_in_window(table, n), f"c={c}, n={n}")
                interval.record(fixed_point_interval_check(c, n, row.x), f"c={c}, n={n}")
        first = first_interval_index(SequenceTable(c=c, rows=table.rows[: grid + 1]))
        interval.record(first == window_start, f"c={c}: erster Index {first}")

    def _check_anchors(self, summary: VerifySummary, table: SequenceTable) -> None:
        c = table.c
        if c == 1 and table.n_max >= 9:
            observed = [row.x for row in table.rows[:10]]
            summary.tally("published_c1_orbit").record(observed == C1_PUBLISHED_ORBIT, f"x_0..x_9 = {observed}")
        if c == 3 and table.n_max >= 15:
            a15 = table.rows[15].a
            summary.tally("published_c3_a15").record(a15 == C3_PUBLISHED_A15, f"a_15 = {a15}")
