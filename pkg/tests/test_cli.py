"""End-to-end tests of the command-line interface: output formats, exit
codes, determinism, and configuration precedence."""

import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest

from dzv.cli import (
    RunConfig,
    SUITE_NAMES,
    SuiteReport,
    certified_decimal,
    cmd_verify,
    main,
)
from dzv.numerics import DomainError, RealBall

from oracles import zeta_direct_interval


def _run(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "dzv.cli", *argv],
        capture_output=True, text=True,
        cwd=os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    )
    return proc


# ---------------------------------------------------------------------------
# bernoulli subcommand
# ---------------------------------------------------------------------------

def test_cli_bernoulli_values():
    assert _run("bernoulli", "12").stdout.strip() == "-691/2730"
    assert _run("bernoulli", "0").stdout.strip() == "1"


def test_cli_bernoulli_negative_is_usage_error():
    proc = _run("bernoulli", "--", "-1")
    assert proc.returncode == 2


# ---------------------------------------------------------------------------
# dzeta subcommand
# ---------------------------------------------------------------------------

def test_cli_dzeta_zeta3_digits():
    proc = _run("dzeta", "2", "1", "-p", "128")
    assert proc.returncode == 0
    out = proc.stdout.strip()
    assert out.startswith("1.2020569")
    assert "±" in out


def test_cli_dzeta_44_matches_exact_value():
    proc = _run("dzeta", "4", "4", "-p", "128")
    assert proc.returncode == 0
    printed = proc.stdout.split("±")[0].strip()
    # oracle: zeta(4,4) = pi^8/113400; enclose pi^8 via the zeta(2) relation
    # instead of reciting digits: compare against the direct-sum enclosure of
    # zeta(8)/12 = zeta(4,4)
    lo, hi = zeta_direct_interval(8, 400)
    val = Fraction(printed)
    assert lo / 12 - Fraction(1, 10**10) <= val <= hi / 12 + Fraction(1, 10**10)


def test_cli_dzeta_divergent_is_usage_error():
    assert _run("dzeta", "1", "2").returncode == 2


# ---------------------------------------------------------------------------
# certified digit printing
# ---------------------------------------------------------------------------

def test_certified_decimal_truncates_at_uncertain_digit():
    # [1.23446, 1.23466]: truncations agree through 3 decimals, differ at 4
    b = RealBall.from_fraction(Fraction(123456, 100000), 200).add_error(Fraction(1, 10**4))
    assert certified_decimal(b, 30) == "1.234"
    wide = RealBall.from_fraction(Fraction(1, 5), 200).add_error(Fraction(1))
    assert certified_decimal(wide, 30) == "0"


def test_certified_decimal_negative_values():
    b = RealBall.from_fraction(Fraction(-355, 113), 200).add_error(Fraction(1, 10**6))
    s = certified_decimal(b, 30)
    assert s.startswith("-3.1415")


# ---------------------------------------------------------------------------
# verify subcommand
# ---------------------------------------------------------------------------

def test_cli_verify_json_report(tmp_path):
    out = tmp_path / "report.json"
    proc = _run("verify", "--suites", "ramanujan,euler-bernoulli",
                "--weights", "4..14", "--format", "json", "--out", str(out))
    assert proc.returncode == 0
    data = json.loads(out.read_text())
    assert [r["suite"] for r in data] == ["ramanujan", "euler-bernoulli"]
    ram = data[0]
    assert ram["passed_count"] + 0 == len(ram["checks"])
    assert ram["failed_count"] == 0
    # exact checks carry no tolerance field
    exact_checks = [c for c in ram["checks"] if c.get("exact")]
    assert exact_checks and all("tolerance" not in c for c in exact_checks)
    # hypothesis skips recorded as skipped, not failed
    skipped = [c for c in ram["checks"] if "skipped_reason" in c]
    assert {c["weight"] for c in skipped} == {4, 5, 6, 7, 9, 10, 11, 12, 13}


def test_cli_verify_unknown_suite_usage_error():
    assert _run("verify", "--suites", "nosuch").returncode == 2


def test_cli_verify_exit_zero_and_csv(tmp_path):
    out = tmp_path / "report.csv"
    proc = _run("verify", "--suites", "sum-formula,weighted-sum",
                "--weights", "3..6", "--precision", "96", "--tol", "1e-20",
                "--format", "csv", "--out", str(out))
    assert proc.returncode == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "suite,label,weight,passed,exact,residual_midpoint,residual_radius"
    assert len(lines) == 1 + 2 * 4


def test_harmonic_suite_runs_all_pairs():
    config = RunConfig(precision_bits=128, tolerance_exponent=30,
                       weight_min=4, weight_max=8, suites=("harmonic",),
                       output_format="json")
    reports, code = cmd_verify(config)
    assert code == 0
    checks = reports[0].checks
    # weights 4..8 give 1+1+2+2+3 = 9 pair checks, no skips
    assert len([c for c in checks if c.skipped_reason is None]) == 9
    assert all(c.passed for c in checks)


def test_json_report_roundtrip():
    config = RunConfig(precision_bits=96, tolerance_exponent=20,
                       weight_min=8, weight_max=8, suites=("corollary2-chain",),
                       output_format="json")
    reports, code = cmd_verify(config)
    assert code == 0
    for r in reports:
        d = r.to_dict()
        assert SuiteReport.from_dict(d).to_dict() == d
        assert SuiteReport.from_dict(json.loads(json.dumps(d))).to_dict() == d


def test_verify_determinism_except_wall_time():
    config = RunConfig(precision_bits=96, tolerance_exponent=20,
                       weight_min=3, weight_max=6,
                       suites=("theorem1", "eq26"), output_format="json")
    r1, _ = cmd_verify(config)
    r2, _ = cmd_verify(config)

    def strip(reports):
        out = [r.to_dict() for r in reports]
        for d in out:
            d.pop("wall_time")
        return out

    assert strip(r1) == strip(r2)


def test_verify_parallel_matches_serial():
    base = dict(precision_bits=96, tolerance_exponent=20,
                weight_min=3, weight_max=7, suites=("lemma1",),
                output_format="json")
    serial, code1 = cmd_verify(RunConfig(**base))
    threaded, code2 = cmd_verify(RunConfig(**base, parallelism=4))
    assert code1 == code2 == 0

    def strip(reports):
        out = [r.to_dict() for r in reports]
        for d in out:
            d.pop("wall_time")
            d["config"].pop("parallelism")
        return out

    assert strip(serial) == strip(threaded)


def test_run_config_validation():
    with pytest.raises(DomainError):
        RunConfig(weight_min=10, weight_max=3)
    with pytest.raises(DomainError):
        RunConfig(suites=("nosuch",))
    with pytest.raises(DomainError):
        RunConfig(output_format="xml")
    with pytest.raises(DomainError):
        RunConfig(parallelism=0)


def test_all_suite_names_registered():
    assert set(SUITE_NAMES) == {
        "sum-formula", "weighted-sum", "harmonic", "gkz-parity", "theorem1",
        "corollary1", "prop1", "lemma1", "eq26", "euler-bernoulli",
        "ramanujan", "corollary2-chain",
    }


def test_env_var_precision_override(tmp_path):
    out = tmp_path / "r.json"
    env = dict(os.environ, DZV_PRECISION="96")
    proc = subprocess.run(
        [sys.executable, "-m", "dzv.cli", "verify", "--suites", "sum-formula",
         "--weights", "3..3", "--tol", "1e-20", "--format", "json", "--out", str(out)],
        capture_output=True, text=True, env=env,
        cwd=os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    )
    assert proc.returncode == 0
    data = json.loads(out.read_text())
    assert data[0]["config"]["precision_bits"] == 96


def test_config_file_with_flag_precedence(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "suites": "sum-formula", "weights": "3..4",
        "precision": 96, "tol": "1e-20", "format": "json",
    }))
    out = tmp_path / "r.json"
    # --precision on the command line must beat the config file
    proc = _run("verify", "--config", str(cfg), "--precision", "128",
                "--out", str(out))
    assert proc.returncode == 0
    data = json.loads(out.read_text())
    assert data[0]["config"]["precision_bits"] == 128
    assert data[0]["config"]["tolerance_exponent"] == 20
    assert data[0]["config"]["weight_min"] == 3
    assert data[0]["config"]["weight_max"] == 4


def test_main_return_paths():
    assert main(["bernoulli", "30"]) == 0
    assert main(["verify", "--suites", "nosuch", "--weights", "3..3"]) == 2


def test_failing_check_exits_one(tmp_path):
    # 96-bit radii (~1e-30) cannot certify a 1e-40 tolerance: honest failure
    out = tmp_path / "r.json"
    proc = _run("verify", "--suites", "sum-formula", "--weights", "3..3",
                "--precision", "96", "--tol", "1e-40", "--format", "json",
                "--out", str(out))
    assert proc.returncode == 1
    data = json.loads(out.read_text())
    assert data[0]["failed_count"] == 1
    assert data[0]["checks"][0]["passed"] is False


def test_precision_unreachable_recorded_as_error(monkeypatch):
    from dzv import cli as cli_mod
    from dzv.numerics import PrecisionUnreachableError

    def exploding(l, ctx):
        raise PrecisionUnreachableError("synthetic escalation cap")

    monkeypatch.setitem(cli_mod._SUITES, "sum-formula",
                        (lambda l: None, exploding))
    config = RunConfig(precision_bits=96, tolerance_exponent=20,
                       weight_min=3, weight_max=3, suites=("sum-formula",),
                       output_format="json")
    reports, code = cmd_verify(config)
    assert code == 1
    rec = reports[0].checks[0]
    assert rec.error == "synthetic escalation cap"
    assert rec.passed is False
