from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List

from egf_series import TruncatedSeries
from models import BoundRow, IntegralityReport, SequenceTable
from services.contracts import VerifySummary

TSV_COLUMNS = ("n", "x", "a", "d", "D")


class ReportService:
    def table_rows(self, table: SequenceTable) -> List[Dict[str, Any]]:
        return [
            {
                "n": row.n,
                "x": str(row.x),
                "a": str(row.a),
                "d": None if row.d is None else str(row.d),
                "D": None if row.D is None else str(row.D),
            }
            for row in table.rows
        ]

    def table_payload(self, table: SequenceTable) -> Dict[str, Any]:
        return {"c": table.c, "n_max": table.n_max, "rows": self.table_rows(table)}

    def table_tsv(self, table: SequenceTable) -> str:
        lines = ["\t".join(TSV_COLUMNS)]
        for row in self.table_rows(table):
            lines.append("\t".join("-" if row[column] is None else str(row[column]) for column in TSV_COLUMNS))
        return "\n".join(lines)

    def certificate_payload(self, report: IntegralityReport) -> Dict[str, Any]:
        return report.to_dict()

    def bounds_payload(self, c: int, rows: Iterable[BoundRow]) -> Dict[str, Any]:
        return {"c": c, "rows": [row.to_dict() for row in rows]}

    def series_payload(self, c: int, series: TruncatedSeries, a_values: List[int], checks: Dict[str, bool] | None) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "c": c,
            "order": series.order,
            "coefficients": [str(value) for value in series.coeffs],
            "a": [str(value) for value in a_values],
        }
        if checks is not None:
            payload["checks"] = dict(checks)
        return payload

    def verify_payload(self, summary: VerifySummary) -> Dict[str, Any]:
        return summary.to_dict()

    def to_json(self, payload: Dict[str, Any]) -> str:
        return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True)

    def write_report(self, report_file: str, payload: Dict[str, Any]) -> None:
        path = Path(report_file)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json(payload) + "\n", encoding="utf-8")
        logging.info("Report geschrieben: %s", report_file)
