from __future__ import annotations

import logging
from fractions import Fraction
from typing import List

from arithmetic_structure import odd_prime_support
from bound_rules import (
    crossover_index,
    default_threshold,
    first_interval_index,
    fixed_point_interval_check,
    select_variant,
    window_excludes_integer,
)
from claims import collect_discrepancies
from models import EvidenceItem, IntegralityReport, SequenceRow, SequenceTable
from sequence_engine import build_table, quadratic_in_window
from services.contracts import CertifySettings


class InvariantViolation(RuntimeError):
    pass


class CertifyService:
    def __init__(self, settings: CertifySettings | None = None) -> None:
        self.settings = settings or CertifySettings()

    def certify(self, c: int, horizon: int | None = None, threshold: Fraction | int | None = None) -> IntegralityReport:
        if c < 1:
            raise ValueError(f"c muss >= 1 sein, erhalten: {c}")
        if horizon is not None and horizon < 0:
            raise ValueError(f"Horizont muss >= 0 sein, erhalten: {horizon}")
        support = odd_prime_support(c, self.settings.factor_limit)
        variant = select_variant(c, support)
        chosen_threshold = default_threshold(c) if threshold is None else Fraction(threshold)
        crossover = crossover_index(c, support, chosen_threshold, variant, self.settings.scan_limit)
        horizon_checked = max(crossover - 1, self.settings.default_horizon if horizon is None else horizon)
        logging.info("c=%d: Variante %s, Crossover %d, pruefe bis n=%d", c, variant, crossover, horizon_checked)

        table = build_table(c, horizon_checked)
        evidence = [self._evidence(table, row) for row in table.rows]
        self._cross_check(table, evidence, crossover)
        first_interval = first_interval_index(table)

        report = IntegralityReport(
            c=c,
            crossover=crossover,
            threshold_variant=variant,
            threshold=chosen_threshold,
            horizon_checked=horizon_checked,
            first_interval_index=first_interval,
            integral_indices=[item.n for item in evidence if item.is_integer],
            evidence=evidence,
            paper_discrepancies=collect_discrepancies(c, support, first_interval),
        )
        logging.info("c=%d: ganzzahlige Glieder bei n=%s", c, report.integral_indices)
        return report

    def reproduce_table(self, c: int, n_max: int) -> SequenceTable:
        return build_table(c, n_max)

    def _evidence(self, table: SequenceTable, row: SequenceRow) -> EvidenceItem:
        n = row.n
        return EvidenceItem(
            n=n,
            x=str(row.x),
            D=row.D,
            interval_ok=fixed_point_interval_check(table.c, n, row.x) if n >= 1 else None,
            window_excluded=window_excludes_integer(table.c, n).excluded if n >= 1 else None,
            quadratic_in_window=quadratic_in_window(table, n) if n >= 2 else None,
            is_integer=row.x.denominator == 1,
        )

    def _cross_check(self, table: SequenceTable, evidence: List[EvidenceItem], crossover: int) -> None:
        problems: List[str] = []
        for row, item in zip(table.rows, evidence):
            n = row.n
            if n >= 1:
                assert row.a_prev is not None
                divides = row.a % row.a_prev == 0
                if (item.D == 1) != divides or item.is_integer != divides:
                    problems.append(f"n={n}: D_n={item.D}, a_(n-1) | a_n ist {divides}")
            if item.quadratic_in_window is not None and item.quadratic_in_window != item.interval_ok:
                problems.append(f"n={n}: Intervall- und Quadratnachweis widersprechen sich")
            if item.is_integer and item.window_excluded and item.interval_ok:
                problems.append(f"n={n}: x_n ganz trotz Intervall- und Fensternachweis")
            if 2 <= n < crossover and not item.is_integer:
                if not (item.window_excluded and (item.interval_ok or item.quadratic_in_window)):
                    problems.append(f"n={n}: Nachweis der Nicht-Ganzzahligkeit unvollstaendig")
        if problems:
            for problem in problems:
                logging.error("Invariante verletzt: %s", problem)
            raise InvariantViolation(f"{len(problems)} Invariantenverletzung(en), erste: {problems[0]}")
