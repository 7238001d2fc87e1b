"""Command-line interface: subcommands, exit codes, and the JSON report shape."""
from __future__ import annotations

import json

import pytest

from wzpi import BUILTIN_NAMES, builtin_record, parse_identity, serialize_identity
from wzpi.cli import (
    EXIT_CHECK_FAILED,
    EXIT_NO_CONVERGENCE,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


# -- list ---------------------------------------------------------------------------

def test_list_shows_every_builtin(capsys):
    code, out, _ = run(capsys, "list")
    assert code == EXIT_OK
    for name in BUILTIN_NAMES:
        assert name in out


def test_list_json_rows(capsys):
    code, rows, _ = run_json(capsys, "list")
    assert code == EXIT_OK
    assert [r["name"] for r in rows] == list(BUILTIN_NAMES)
    by_name = {r["name"]: r for r in rows}
    assert by_name["theorem2"]["erratum"] is True
    assert by_name["theorem9"]["erratum"] is True
    assert by_name["zeilberger"]["has_certificate"] is False
    assert by_name["ramanujan"]["kind"] == "numeric"


# -- verify -------------------------------------------------------------------------

def test_verify_passing_identity(capsys):
    code, out, _ = run(capsys, "verify", "--id", "theorem1")
    assert code == EXIT_OK
    assert "certificate: pass" in out
    assert "exact_sums: pass" in out
    assert "n = 0..20" in out


def test_verify_flagged_identity_fails_by_default(capsys):
    code, out, _ = run(capsys, "verify", "--id", "theorem9", "--n-max", "6")
    assert code == EXIT_CHECK_FAILED
    assert "certificate: fail" in out
    assert "exact_sums: pass" in out


def test_verify_flagged_identity_skips_with_errata_flag(capsys):
    code, out, _ = run(capsys, "verify", "--id", "theorem9", "--n-max", "6",
                       "--allow-errata")
    assert code == EXIT_OK
    assert "certificate: skip" in out


def test_verify_all_with_errata_allowance(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--n-max", "4", "--allow-errata")
    assert code == EXIT_OK
    for name in BUILTIN_NAMES:
        assert name in out


def test_verify_json_report_shape(capsys):
    code, doc, _ = run_json(capsys, "verify", "--id", "theorem3", "--n-max", "4")
    assert code == EXIT_OK
    assert doc["identity"] == "theorem3"
    assert doc["tool_version"]
    names = [c["name"] for c in doc["checks"]]
    assert names == ["certificate", "exact_sums"]
    for chk in doc["checks"]:
        assert chk["status"] in ("pass", "fail", "skip")
        assert isinstance(chk["millis"], int)
        assert isinstance(chk["detail"], str)


def test_verify_all_json_is_an_array(capsys):
    code, docs, _ = run_json(capsys, "verify", "--all", "--n-max", "2",
                             "--allow-errata")
    assert code == EXIT_OK
    assert [d["identity"] for d in docs] == list(BUILTIN_NAMES)


def test_verify_file_round_trip(capsys, tmp_path):
    path = tmp_path / "t4.identity"
    path.write_text(serialize_identity(builtin_record("theorem4")),
                    encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--file", str(path), "--n-max", "3")
    assert code == EXIT_OK
    assert "theorem4" in out


def test_verify_unknown_identity(capsys):
    code, _, err = run(capsys, "verify", "--id", "theorem99")
    assert code == EXIT_USAGE
    assert "unknown identity" in err


def test_verify_missing_file(capsys):
    code, _, err = run(capsys, "verify", "--file", "/nonexistent/x.identity")
    assert code == EXIT_USAGE
    assert "error" in err


def test_verify_malformed_file(capsys, tmp_path):
    path = tmp_path / "bad.identity"
    path.write_text("[identity]\nname = broken\n", encoding="utf-8")
    code, _, err = run(capsys, "verify", "--file", str(path))
    assert code == EXIT_USAGE
    assert "parse error" in err


# -- sum ----------------------------------------------------------------------------

def test_sum_prints_both_sides(capsys):
    code, out, _ = run(capsys, "sum", "--id", "theorem1", "--n", "1")
    assert code == EXIT_OK
    assert out.strip() == "LHS = 3/5, RHS = 3/5, equal"


def test_sum_of_row_two(capsys):
    code, out, _ = run(capsys, "sum", "--id", "zeilberger", "--n", "2")
    assert code == EXIT_OK
    assert out.strip() == "LHS = 15/8, RHS = 15/8, equal"


def test_sum_rejects_non_terminating_series(capsys):
    code, _, err = run(capsys, "sum", "--id", "ramanujan", "--n", "1")
    assert code == EXIT_USAGE
    assert "no closed form" in err or "terminate" in err


def test_sum_rejects_negative_row(capsys):
    code, _, err = run(capsys, "sum", "--id", "theorem1", "--n", "-2")
    assert code == EXIT_USAGE


# -- synth --------------------------------------------------------------------------

def test_synth_matches_printed_certificate(capsys):
    code, out, _ = run(capsys, "synth", "--id", "theorem1")
    assert code == EXIT_OK
    assert "synthesis: pass" in out
    assert "semantically equal to the printed certificate" in out
    assert "R_num" in out and "R_den" in out


def test_synth_reports_discrepancy_for_flagged_certificate(capsys):
    code, out, _ = run(capsys, "synth", "--id", "theorem2")
    assert code == EXIT_OK
    assert "differs from the printed certificate" in out


def test_synth_json_carries_certificate(capsys):
    code, doc, _ = run_json(capsys, "synth", "--id", "zeilberger")
    assert code == EXIT_OK
    assert doc["identity"] == "zeilberger"
    assert doc["certificate"]["num"]
    assert doc["certificate"]["den"]


def test_synth_emit_writes_a_verifiable_record(capsys, tmp_path):
    target = tmp_path / "repaired.identity"
    code, out, _ = run(capsys, "synth", "--id", "theorem9", "--emit", str(target))
    assert code == EXIT_OK
    rec = parse_identity(target.read_text(encoding="utf-8"))
    assert rec.name == "theorem9"
    assert rec.has_certificate
    assert rec.erratum is False

    code, out, _ = run(capsys, "verify", "--file", str(target), "--n-max", "4")
    assert code == EXIT_OK
    assert "certificate: pass" in out


def test_synth_rejects_non_wz_identities(capsys):
    code, _, err = run(capsys, "synth", "--id", "r1103")
    assert code == EXIT_USAGE


# -- numeric ------------------------------------------------------------------------

def test_numeric_standard_point(capsys):
    code, out, _ = run(capsys, "numeric", "--id", "theorem1")
    assert code == EXIT_OK
    assert "series_vs_closed_form: pass" in out
    assert "closed_form_vs_2_over_pi: pass" in out


def test_numeric_special_form_check(capsys):
    code, out, _ = run(capsys, "numeric", "--id", "theorem6")
    assert code == EXIT_OK
    assert "closed_form_vs_sqrt5_over_pi_cos_sum: pass" in out


def test_numeric_custom_point_skips_pi_target(capsys):
    code, out, _ = run(capsys, "numeric", "--id", "theorem1", "--point=-1/4")
    assert code == EXIT_OK
    assert "series_vs_closed_form: pass" in out
    assert "closed_form_vs_2_over_pi: skip" in out


def test_numeric_tolerance_is_enforced(capsys):
    code, out, _ = run(capsys, "numeric", "--id", "theorem1", "--tol", "1e-30")
    assert code == EXIT_CHECK_FAILED


# -- pi -----------------------------------------------------------------------------

def test_pi_two_terms(capsys):
    code, out, _ = run(capsys, "pi", "--series", "r1103", "--terms", "2",
                       "--tol", "1e-12")
    assert code == EXIT_OK
    assert "pi ~ 3.14159265358979" in out


def test_pi_unreachable_tolerance_fails(capsys):
    code, out, _ = run(capsys, "pi", "--series", "r1103", "--terms", "1",
                       "--tol", "1e-12")
    assert code == EXIT_CHECK_FAILED


def test_pi_unknown_series():
    with pytest.raises(SystemExit) as info:
        main(["pi", "--series", "leibniz"])
    assert info.value.code == EXIT_USAGE


# -- global behaviour -----------------------------------------------------------------

def test_version_flag(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0


def test_usage_error_on_missing_subcommand():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == EXIT_USAGE


def test_conflicting_verify_selectors():
    with pytest.raises(SystemExit) as info:
        main(["verify", "--id", "theorem1", "--all"])
    assert info.value.code == EXIT_USAGE
