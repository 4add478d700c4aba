from __future__ import annotations

import json

import pytest

import orbit_certify
from services.contracts import VerifySummary


def test_table_command_prints_c1_orbit(capsys):
    result = orbit_certify.main(["table", "--c", "1", "--n-max", "9"])
    lines = capsys.readouterr().out.splitlines()

    assert result == 0
    assert [line.split("\t")[1] for line in lines[1:]] == [
        "1", "1", "2", "2", "5/2", "13/5", "38/13", "58/19", "191/58", "655/191"
    ]


def test_table_command_json(capsys):
    assert orbit_certify.main(["table", "--c", "3", "--n-max", "15", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["rows"][15]["a"] == "4685949792"


def test_certify_command_writes_report(tmp_path, capsys):
    report_file = tmp_path / "cert.json"
    result = orbit_certify.main(["certify", "--c", "1", "--report-file", str(report_file)])
    printed = json.loads(capsys.readouterr().out)

    assert result == 0
    assert printed["integral_indices"] == [0, 1, 2, 3]
    assert printed["crossover"] == 12
    assert json.loads(report_file.read_text(encoding="utf-8")) == printed


def test_certify_output_is_byte_identical(capsys):
    orbit_certify.main(["certify", "--c", "4", "--horizon", "8"])
    first = capsys.readouterr().out
    orbit_certify.main(["certify", "--c", "4", "--horizon", "8"])
    assert capsys.readouterr().out == first


def test_certify_uses_service_builder(monkeypatch, capsys):
    called: dict[str, object] = {}

    class FakeCertifyService:
        def certify(self, c, horizon=None, threshold=None):
            called["certify"] = (c, horizon, threshold)
            raise orbit_certify.InvariantViolation("kaputt")

    monkeypatch.setattr(orbit_certify, "build_certify_service", lambda settings=None: FakeCertifyService())

    result = orbit_certify.main(["certify", "--c", "7", "--threshold", "3/2"])

    assert result == 1
    assert called["certify"][0] == 7
    assert str(called["certify"][2]) == "3/2"
    assert capsys.readouterr().out == ""


def test_series_check_passes(capsys):
    result = orbit_certify.main(["series", "--c", "1", "--order", "4", "--check"])
    payload = json.loads(capsys.readouterr().out)

    assert result == 0
    assert payload["coefficients"] == ["1", "1", "1", "2/3", "5/12"]
    assert payload["a"] == ["1", "1", "2", "4", "10"]
    assert all(payload["checks"].values())


def test_bounds_command_variants(capsys):
    assert orbit_certify.main(["bounds", "--c", "1", "--from", "11", "--to", "12", "--threshold", "2"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert [row["verdict_ge_threshold"] for row in rows] == [False, True]

    assert orbit_certify.main(["bounds", "--c", "3", "--from", "16", "--to", "30", "--variant", "anchored", "--anchor", "15"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert len(rows) == 15
    assert all(row["verdict_ge_threshold"] for row in rows)
    assert rows[0]["variant"] == "anchored(a_15=4685949792)"


def test_usage_errors_exit_with_two(capsys):
    assert orbit_certify.main(["certify", "--c", "0"]) == 2
    assert orbit_certify.main(["bounds", "--c", "3", "--from", "5", "--to", "6", "--variant", "anchored"]) == 2
    assert orbit_certify.main(["bounds", "--c", "3", "--from", "1", "--to", "6"]) == 2
    with pytest.raises(SystemExit) as excinfo:
        orbit_certify.main(["certify", "--c", "2", "--threshold", "abc"])
    assert excinfo.value.code == 2


def test_crossover_exhaustion_exits_with_one():
    assert orbit_certify.main(["certify", "--c", "3", "--scan-limit", "20"]) == 1


def test_constant_bound_above_threshold_exits_with_one():
    assert orbit_certify.main(["certify", "--c", "2", "--threshold", "2"]) == 1


def test_series_rejects_c_outside_domain(capsys):
    assert orbit_certify.main(["series", "--c", "0", "--order", "5"]) == 2
    assert capsys.readouterr().out == ""


def test_verify_exit_code_reflects_summary(monkeypatch, capsys):
    assert orbit_certify.main(["verify", "--c-from", "1", "--c-to", "2", "--n-max", "12"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] is True

    class FailingVerifyService:
        def verify_suite(self, c_from, c_to, n_max):
            summary = VerifySummary(c_from=c_from, c_to=c_to, n_max=n_max)
            summary.tally("lemma2").record(False, "c=1, n=3")
            return summary

    monkeypatch.setattr(orbit_certify, "build_verify_service", lambda settings=None: FailingVerifyService())
    assert orbit_certify.main(["verify", "--c-from", "1", "--c-to", "1", "--n-max", "5"]) == 1


def test_module_level_helpers_delegate():
    assert orbit_certify.certify(2, horizon=3).integral_indices == [0, 1]
    assert orbit_certify.reproduce_table(1, 4).a_values() == [1, 1, 2, 4, 10]
    assert orbit_certify.verify_suite(1, 1, 9).passed
