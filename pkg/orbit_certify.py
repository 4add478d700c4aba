"""
Zertifizierende Analyse der Rekursion x_0 = 1, x_(n+1) = c + n/x_n.

Unterbefehle:
  table    exakte Tabelle (n, x_n, a_n, d_n, D_n) als TSV oder JSON
  certify  Ganzzahligkeitszertifikat fuer ein c
  series   Koeffizienten der EGF exp(cx + x^2/2), optional mit Pruefungen
  bounds   Nennerschranken E/E2/E3/E4 bzw. verankerte Schranke fuer n in einem Bereich
  verify   alle Invarianten fuer einen Bereich von c
"""

from __future__ import annotations

import argparse
import importlib.util
import logging
import os
import sys
from fractions import Fraction
from typing import Any, Dict, List

from arithmetic_structure import DEFAULT_FACTOR_LIMIT, odd_prime_support
from bound_rules import DEFAULT_SCAN_LIMIT, CrossoverNotFoundError, anchored_lower_bound, denominator_lower_bound
from egf_series import cauchy_residual, coefficients_to_a, egf, exp_x_squared, series_mul
from exact_core import HINT_DIGITS, compare_rational_to_power_product
from models import BoundRow, IntegralityReport, SequenceTable
from sequence_engine import DEFAULT_N_MAX, build_table
from services import CertifyService, CertifySettings, InvariantViolation, ReportService, VerifyService, VerifySummary


def load_dotenv(*args: Any, **kwargs: Any) -> bool:
    if importlib.util.find_spec("dotenv") is None:
        return False
    from dotenv import load_dotenv as _load_dotenv
    return _load_dotenv(*args, **kwargs)


load_dotenv()

logging.basicConfig(level=os.environ.get("ORBIT_LOG_LEVEL", "INFO"))

REPORT_FILE = os.environ.get("ORBIT_REPORT_FILE", "")


def build_certify_service(settings: CertifySettings | None = None) -> CertifyService:
    return CertifyService(settings=settings)


def build_verify_service(settings: CertifySettings | None = None) -> VerifyService:
    return VerifyService(settings=settings)


def build_report_service() -> ReportService:
    return ReportService()


def certify(c: int, horizon: int | None = None, threshold: Fraction | int | None = None) -> IntegralityReport:
    return build_certify_service().certify(c, horizon=horizon, threshold=threshold)


def reproduce_table(c: int, n_max: int) -> SequenceTable:
    return build_certify_service().reproduce_table(c, n_max)


def verify_suite(c_from: int, c_to: int, n_max: int) -> VerifySummary:
    return build_verify_service().verify_suite(c_from, c_to, n_max)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"keine rationale Zahl: {text}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Zertifizierende Analyse von x_(n+1) = c + n/x_n")
    commands = parser.add_subparsers(dest="command", required=True)

    table = commands.add_parser("table", help="Exakte Folgentabelle ausgeben")
    table.add_argument("--c", type=int, required=True)
    table.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    table.add_argument("--format", choices=["tsv", "json"], default="tsv")

    cert = commands.add_parser("certify", help="Ganzzahligkeitszertifikat erzeugen")
    cert.add_argument("--c", type=int, required=True)
    cert.add_argument("--horizon", type=int, help="Mindesthorizont der exakten Pruefung (Standard 64)")
    cert.add_argument("--threshold", type=_rational, help="Schwelle fuer die Nennerschranke, z. B. 2 oder 3/2")
    cert.add_argument("--format", choices=["json"], default="json")
    cert.add_argument("--scan-limit", type=int, default=DEFAULT_SCAN_LIMIT)
    cert.add_argument("--factor-limit", type=int, default=DEFAULT_FACTOR_LIMIT)
    cert.add_argument("--report-file", default=REPORT_FILE, help="Zertifikat zusaetzlich als JSON-Datei schreiben")

    series = commands.add_parser("series", help="EGF-Koeffizienten ausgeben")
    series.add_argument("--c", type=int, required=True)
    series.add_argument("--order", type=int, required=True)
    series.add_argument("--check", action="store_true", help="Cauchy-Residuum und Produktidentitaet pruefen")

    bounds = commands.add_parser("bounds", help="Nennerschranken fuer n im Bereich ausgeben")
    bounds.add_argument("--c", type=int, required=True)
    bounds.add_argument("--from", dest="n_from", type=int, required=True)
    bounds.add_argument("--to", dest="n_to", type=int, required=True)
    bounds.add_argument("--variant", choices=["auto", "E", "E2", "E3", "E4", "anchored"], default="auto")
    bounds.add_argument("--threshold", type=_rational, default=Fraction(1))
    bounds.add_argument("--anchor", type=int, help="Ankerindex m fuer --variant anchored")
    bounds.add_argument("--factor-limit", type=int, default=DEFAULT_FACTOR_LIMIT)

    verify = commands.add_parser("verify", help="Alle Invarianten fuer einen Bereich von c pruefen")
    verify.add_argument("--c-from", type=int, required=True)
    verify.add_argument("--c-to", type=int, required=True)
    verify.add_argument("--n-max", type=int, required=True)
    verify.add_argument("--factor-limit", type=int, default=DEFAULT_FACTOR_LIMIT)
    verify.add_argument("--report-file", default=REPORT_FILE, help="Zusammenfassung zusaetzlich als JSON-Datei schreiben")
    return parser


def _emit(reporter: ReportService, payload: Dict[str, Any], report_file: str = "") -> None:
    print(reporter.to_json(payload))
    if report_file:
        reporter.write_report(report_file, payload)


def _run_table(args: argparse.Namespace, reporter: ReportService) -> int:
    table = reproduce_table(args.c, args.n_max)
    if args.format == "tsv":
        print(reporter.table_tsv(table))
    else:
        _emit(reporter, reporter.table_payload(table))
    return 0


def _run_certify(args: argparse.Namespace, reporter: ReportService) -> int:
    settings = CertifySettings(scan_limit=args.scan_limit, factor_limit=args.factor_limit)
    report = build_certify_service(settings).certify(args.c, horizon=args.horizon, threshold=args.threshold)
    _emit(reporter, reporter.certificate_payload(report), args.report_file)
    return 0


def _run_series(args: argparse.Namespace, reporter: ReportService) -> int:
    series = egf(args.c, args.order)
    a_values = coefficients_to_a(series)
    checks: Dict[str, bool] | None = None
    if args.check:
        table = build_table(args.c, args.order)
        checks = {
            "coefficients_match_recurrence": a_values == table.a_values(),
            "product_identity": series_mul(series, series.reflect()) == exp_x_squared(args.order),
        }
        if args.order >= 2:
            checks["cauchy_residual_zero"] = cauchy_residual(series, args.c).is_zero()
    _emit(reporter, reporter.series_payload(args.c, series, a_values, checks))
    if checks is not None and not all(checks.values()):
        logging.error("Reihenpruefung fehlgeschlagen: %s", [name for name, ok in checks.items() if not ok])
        return 1
    return 0


def _anchored_rows(args: argparse.Namespace) -> List[BoundRow]:
    if args.anchor is None:
        raise ValueError("--variant anchored braucht --anchor")
    support = odd_prime_support(args.c, args.factor_limit)
    anchor_value = build_table(args.c, args.anchor).rows[args.anchor].a
    rows: List[BoundRow] = []
    for n in range(args.n_from, args.n_to + 1):
        value = anchored_lower_bound(args.c, n, support, args.anchor, anchor_value)
        rows.append(
            BoundRow(
                n=n,
                variant=f"anchored(a_{args.anchor}={anchor_value})",
                value=value,
                threshold=args.threshold,
                verdict_ge_threshold=compare_rational_to_power_product(args.threshold, value) != "GT",
                decimal_hint=value.decimal_hint(HINT_DIGITS),
            )
        )
    return rows


def _run_bounds(args: argparse.Namespace, reporter: ReportService) -> int:
    if args.n_from < 2 or args.n_to < args.n_from:
        raise ValueError(f"Ungueltiger Bereich {args.n_from}..{args.n_to}; Schranken ab n=2")
    if args.variant == "anchored":
        rows = _anchored_rows(args)
    else:
        support = odd_prime_support(args.c, args.factor_limit)
        rows = [
            denominator_lower_bound(args.c, n, support, args.variant, args.threshold)
            for n in range(args.n_from, args.n_to + 1)
        ]
    _emit(reporter, reporter.bounds_payload(args.c, rows))
    return 0


def _run_verify(args: argparse.Namespace, reporter: ReportService) -> int:
    settings = CertifySettings(factor_limit=args.factor_limit)
    summary = build_verify_service(settings).verify_suite(args.c_from, args.c_to, args.n_max)
    _emit(reporter, reporter.verify_payload(summary), args.report_file)
    return 0 if summary.passed else 1


COMMANDS = {
    "table": _run_table,
    "certify": _run_certify,
    "series": _run_series,
    "bounds": _run_bounds,
    "verify": _run_verify,
}


def main(argv: List[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    reporter = build_report_service()
    try:
        return COMMANDS[args.command](args, reporter)
    except (InvariantViolation, CrossoverNotFoundError) as exc:
        logging.error(str(exc))
        return 1
    except ValueError as exc:
        logging.error(str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
