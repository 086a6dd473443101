"""Command-line front end: compute values, run verification suites over
weight ranges, and emit machine-readable reports.

Exit codes: 0 all checks passed (skips allowed), 1 any check failed or
errored, 2 usage error.  Printed values show only digits certified by the
ball radius.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .bernoulli import IdentityVerdict, bernoulli, euler_identity_check, ramanujan_check
from .dzeta import IndexPair, double_zeta, functional_eq26_check, get_table
from .identities import (
    CheckReport,
    check_from_sides,
    corollary1_check,
    corollary2_exact_chain,
    gkz_parity_check,
    lemma1_check,
    prop1_check,
    theorem1_check,
)
from .numerics import (
    ComplexBall,
    DomainError,
    PrecisionCtx,
    PrecisionUnreachableError,
    RealBall,
    ball_is_zero_within,
    ball_sum,
)
from .zeta import zeta_numeric

__all__ = ["RunConfig", "SuiteReport", "CheckRecord", "cmd_verify", "main", "SUITE_NAMES"]

_ENV_PRECISION = "DZV_PRECISION"
_DEFAULT_PRECISION = 192
_DEFAULT_TOL_EXP = 40
_EQ26_SAMPLES = 5


# ---------------------------------------------------------------------------
# configuration and serializable reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RunConfig:
    precision_bits: int = _DEFAULT_PRECISION
    tolerance_exponent: int = _DEFAULT_TOL_EXP
    weight_min: int = 3
    weight_max: int = 12
    suites: tuple = ()
    output_format: str = "text"
    output_path: Optional[str] = None
    parallelism: int = 1

    def __post_init__(self):
        if self.weight_min > self.weight_max:
            raise DomainError("weight_min must not exceed weight_max")
        if self.precision_bits < 64:
            raise DomainError("precision must be at least 64 bits")
        if self.output_format not in ("json", "csv", "text"):
            raise DomainError(f"unknown output format {self.output_format!r}")
        if self.parallelism < 1:
            raise DomainError("parallelism must be >= 1")
        for s in self.suites:
            if s not in SUITE_NAMES:
                raise DomainError(f"unknown suite {s!r}")

    def ctx(self) -> PrecisionCtx:
        return PrecisionCtx(self.precision_bits,
                            Fraction(1, 10 ** self.tolerance_exponent))

    def to_dict(self) -> dict:
        return {
            "precision_bits": self.precision_bits,
            "tolerance_exponent": self.tolerance_exponent,
            "weight_min": self.weight_min,
            "weight_max": self.weight_max,
            "suites": list(self.suites),
            "output_format": self.output_format,
            "output_path": self.output_path,
            "parallelism": self.parallelism,
        }

    @staticmethod
    def from_dict(d: dict) -> "RunConfig":
        return RunConfig(
            precision_bits=d["precision_bits"],
            tolerance_exponent=d["tolerance_exponent"],
            weight_min=d["weight_min"],
            weight_max=d["weight_max"],
            suites=tuple(d["suites"]),
            output_format=d["output_format"],
            output_path=d.get("output_path"),
            parallelism=d["parallelism"],
        )


@dataclass(frozen=True)
class CheckRecord:
    """One check in serialized form; numeric fields are decimal strings."""

    label: str
    weight: int
    lhs: str
    rhs: str
    residual_midpoint: str
    residual_radius: str
    exact: bool
    passed: bool
    tolerance: Optional[str] = None
    skipped_reason: Optional[str] = None
    error: Optional[str] = None

    def to_dict(self) -> dict:
        d = {
            "label": self.label,
            "weight": self.weight,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual_midpoint": self.residual_midpoint,
            "residual_radius": self.residual_radius,
            "exact": self.exact,
            "passed": self.passed,
        }
        if self.tolerance is not None:
            d["tolerance"] = self.tolerance
        if self.skipped_reason is not None:
            d["skipped_reason"] = self.skipped_reason
        if self.error is not None:
            d["error"] = self.error
        return d

    @staticmethod
    def from_dict(d: dict) -> "CheckRecord":
        return CheckRecord(
            label=d["label"], weight=d["weight"], lhs=d["lhs"], rhs=d["rhs"],
            residual_midpoint=d["residual_midpoint"],
            residual_radius=d["residual_radius"],
            exact=d["exact"], passed=d["passed"],
            tolerance=d.get("tolerance"),
            skipped_reason=d.get("skipped_reason"),
            error=d.get("error"),
        )


@dataclass
class SuiteReport:
    suite: str
    checks: list
    passed_count: int
    failed_count: int
    wall_time: float
    config_echo: RunConfig

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config_echo.to_dict(),
            "checks": [c.to_dict() for c in self.checks],
            "passed_count": self.passed_count,
            "failed_count": self.failed_count,
            "wall_time": self.wall_time,
        }

    @staticmethod
    def from_dict(d: dict) -> "SuiteReport":
        return SuiteReport(
            suite=d["suite"],
            checks=[CheckRecord.from_dict(c) for c in d["checks"]],
            passed_count=d["passed_count"],
            failed_count=d["failed_count"],
            wall_time=d["wall_time"],
            config_echo=RunConfig.from_dict(d["config"]),
        )


# ---------------------------------------------------------------------------
# decimal formatting of balls
# ---------------------------------------------------------------------------

def _decimal_truncate(q: Fraction, digits: int) -> str:
    """Decimal expansion of q truncated toward zero at `digits` places."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = (q.numerator * 10 ** digits) // q.denominator
    s = str(scaled).rjust(digits + 1, "0")
    if digits == 0:
        return sign + s
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def _radius_decimal(r: Fraction) -> str:
    """Two-significant-digit upper bound of a nonnegative rational, sci notation."""
    if r == 0:
        return "0"
    e = 0
    x = r
    while x >= 10:
        x /= 10
        e += 1
    while x < 1:
        x *= 10
        e -= 1
    # x in [1, 10); round mantissa UP to 2 digits
    m = (x.numerator * 10 + x.denominator - 1) // x.denominator
    if m >= 100:
        m //= 10
        e += 1
    return f"{m / 10:.1f}e{e:+03d}"


def certified_decimal(ball: RealBall, max_digits: int) -> str:
    """Digits shared by every point of the ball, truncated at the first digit
    the radius could alter."""
    lo, hi = ball.lower_fraction(), ball.upper_fraction()
    if lo <= 0 <= hi:
        return "0"
    if hi < 0:
        inner = certified_decimal(ball.neg(), max_digits)
        return "-" + inner if inner != "0" else "0"
    best = None
    k = 0
    while k <= max_digits:
        if (lo.numerator * 10 ** k) // lo.denominator == (hi.numerator * 10 ** k) // hi.denominator:
            best = k
            k = k * 2 if k else 1
        else:
            break
    if best is None:
        return "0"
    # refine between best and k
    while best + 1 < k:
        mid = (best + k) // 2
        if (lo.numerator * 10 ** mid) // lo.denominator == (hi.numerator * 10 ** mid) // hi.denominator:
            best = mid
        else:
            k = mid
    return _decimal_truncate(lo, min(best, max_digits))


def _ball_str(b: Union[RealBall, ComplexBall], prec: int) -> str:
    digits = max(8, int(prec * 0.301))
    if isinstance(b, ComplexBall):
        re = certified_decimal(b.real, digits)
        im = certified_decimal(b.imag, digits)
        return f"{re} + {im}i"
    return certified_decimal(b, digits)


def _residual_fields(residual: Union[RealBall, ComplexBall]) -> tuple:
    if isinstance(residual, ComplexBall):
        mid = (f"{_decimal_truncate(residual.real.midpoint_fraction(), 60)}"
               f" + {_decimal_truncate(residual.imag.midpoint_fraction(), 60)}i")
        rad = _radius_decimal(residual.max_radius_fraction())
    else:
        mid = _decimal_truncate(residual.midpoint_fraction(), 60)
        rad = _radius_decimal(residual.radius_fraction())
    return mid, rad


def _record_from_report(r: CheckReport, prec: int) -> CheckRecord:
    mid, rad = _residual_fields(r.residual)
    return CheckRecord(
        label=r.label, weight=r.weight,
        lhs=_ball_str(r.lhs, prec), rhs=_ball_str(r.rhs, prec),
        residual_midpoint=mid, residual_radius=rad,
        exact=r.exact, passed=r.passed,
        tolerance=None if r.exact else f"1e-{_tol_exponent(r.tolerance)}",
    )


def _tol_exponent(tol: Fraction) -> int:
    e = 0
    x = Fraction(1)
    while x > tol and e < 10000:
        x /= 10
        e += 1
    return e


def _record_from_verdict(v: IdentityVerdict) -> CheckRecord:
    return CheckRecord(
        label=v.label, weight=v.weight,
        lhs=str(v.lhs), rhs=str(v.rhs),
        residual_midpoint=str(v.lhs - v.rhs), residual_radius="0",
        exact=True, passed=v.holds,
    )


def _skip_record(suite: str, weight: int, reason: str) -> CheckRecord:
    return CheckRecord(
        label=f"{suite}[l={weight}]", weight=weight,
        lhs="", rhs="", residual_midpoint="", residual_radius="",
        exact=False, passed=True, skipped_reason=reason,
    )


# ---------------------------------------------------------------------------
# suite registry
# ---------------------------------------------------------------------------

def _suite_sum_formula(l: int, ctx: PrecisionCtx) -> list:
    t = get_table(l, ctx)
    wp = ctx.working_precision + 48
    lhs = ball_sum(t.entries.values(), wp)
    rhs = zeta_numeric(l, ctx)
    return [check_from_sides(f"sum-formula[l={l}]", l, lhs, rhs, ctx)]


def _suite_weighted_sum(l: int, ctx: PrecisionCtx) -> list:
    t = get_table(l, ctx)
    wp = ctx.working_precision + 48
    lhs = ball_sum((v.mul_int(2 ** (p.l1 - 1)) for p, v in t.entries.items()), wp)
    rhs = zeta_numeric(l, ctx).mul(RealBall.from_fraction(Fraction(l + 1, 2), wp), wp)
    return [check_from_sides(f"weighted-sum[l={l}]", l, lhs, rhs, ctx)]


def _suite_harmonic(l: int, ctx: PrecisionCtx) -> list:
    t = get_table(l, ctx)
    wp = ctx.working_precision + 48
    zl = zeta_numeric(l, ctx)
    out = []
    for a in range(2, l // 2 + 1):
        b = l - a
        lhs = zeta_numeric(a, ctx).mul(zeta_numeric(b, ctx), wp)
        rhs = t.entry(a, b).add(t.entry(b, a), wp).add(zl, wp)
        out.append(check_from_sides(f"harmonic[{a},{b}]", l, lhs, rhs, ctx))
    return out


def _suite_gkz_parity(l: int, ctx: PrecisionCtx) -> list:
    return list(gkz_parity_check(get_table(l, ctx)))


def _suite_theorem1(l: int, ctx: PrecisionCtx) -> list:
    return [theorem1_check(get_table(l, ctx))]


def _suite_corollary1(l: int, ctx: PrecisionCtx) -> list:
    return [corollary1_check(get_table(l, ctx))]


def _suite_prop1(l: int, ctx: PrecisionCtx) -> list:
    return [prop1_check(get_table(l, ctx))]


def _suite_lemma1(l: int, ctx: PrecisionCtx) -> list:
    return lemma1_check(l, ctx)


def _eq26_sample_args(l: int) -> list:
    """Deterministic rational sample points with |x|, |y| <= 2, plus (1, 1)."""
    rng = random.Random(0x26000 + l)
    pts = [(Fraction(1), Fraction(1))]
    while len(pts) < _EQ26_SAMPLES:
        x = Fraction(rng.randint(-16, 16), 8)
        y = Fraction(rng.randint(-16, 16), 8)
        pts.append((x, y))
    return pts


def _suite_eq26(l: int, ctx: PrecisionCtx) -> list:
    wp = ctx.working_precision + 48
    out = []
    for x, y in _eq26_sample_args(l):
        xb = ComplexBall.from_fractions(x, 0, wp)
        yb = ComplexBall.from_fractions(y, 0, wp)
        residual = functional_eq26_check(l, xb, yb, ctx)
        ok_re, _ = ball_is_zero_within(residual.real, ctx.target_tolerance)
        ok_im, _ = ball_is_zero_within(residual.imag, ctx.target_tolerance)
        mid, rad = _residual_fields(residual)
        out.append(CheckRecord(
            label=f"eq26[l={l},x={x},y={y}]", weight=l,
            lhs="residual", rhs="0",
            residual_midpoint=mid, residual_radius=rad,
            exact=False, passed=ok_re and ok_im,
            tolerance=f"1e-{_tol_exponent(ctx.target_tolerance)}",
        ))
    return out


def _suite_euler_bernoulli(l: int, ctx: PrecisionCtx) -> list:
    return [euler_identity_check(l)]


def _suite_ramanujan(l: int, ctx: PrecisionCtx) -> list:
    return list(ramanujan_check(l))


def _suite_corollary2(l: int, ctx: PrecisionCtx) -> list:
    return [corollary2_exact_chain(l, ctx)]


def _needs(cond: bool, reason: str) -> Optional[str]:
    return None if cond else reason


_SUITES: dict = {
    "sum-formula": (lambda l: _needs(l >= 3, "needs weight >= 3"), _suite_sum_formula),
    "weighted-sum": (lambda l: _needs(l >= 3, "needs weight >= 3"), _suite_weighted_sum),
    "harmonic": (lambda l: _needs(l >= 4, "needs weight >= 4 (both exponents >= 2)"),
                 _suite_harmonic),
    "gkz-parity": (lambda l: _needs(l % 2 == 0 and l >= 4, "needs even weight >= 4"),
                   _suite_gkz_parity),
    "theorem1": (lambda l: _needs(l >= 3, "needs weight >= 3"), _suite_theorem1),
    "corollary1": (lambda l: _needs(l % 2 == 0 and l >= 4, "needs even weight >= 4"),
                   _suite_corollary1),
    "prop1": (lambda l: _needs(l >= 3, "needs weight >= 3"), _suite_prop1),
    "lemma1": (lambda l: _needs(l >= 3, "needs weight >= 3"), _suite_lemma1),
    "eq26": (lambda l: _needs(l >= 3, "needs weight >= 3"), _suite_eq26),
    "euler-bernoulli": (lambda l: _needs(l % 2 == 0 and l >= 4, "needs even weight >= 4"),
                        _suite_euler_bernoulli),
    "ramanujan": (lambda l: _needs(l % 6 == 2 and l >= 8, "needs l = 2 (mod 6), l >= 8"),
                  _suite_ramanujan),
    "corollary2-chain": (lambda l: _needs(l % 6 == 2 and l >= 8,
                                          "needs l = 2 (mod 6), l >= 8"),
                         _suite_corollary2),
}

SUITE_NAMES = tuple(_SUITES)


def _to_record(item, prec: int) -> CheckRecord:
    if isinstance(item, CheckRecord):
        return item
    if isinstance(item, IdentityVerdict):
        return _record_from_verdict(item)
    return _record_from_report(item, prec)


def _run_suite_weight(suite: str, l: int, ctx: PrecisionCtx) -> list:
    applies, runner = _SUITES[suite]
    reason = applies(l)
    if reason is not None:
        return [_skip_record(suite, l, reason)]
    try:
        return [_to_record(item, ctx.working_precision) for item in runner(l, ctx)]
    except PrecisionUnreachableError as exc:
        return [CheckRecord(
            label=f"{suite}[l={l}]", weight=l,
            lhs="", rhs="", residual_midpoint="", residual_radius="",
            exact=False, passed=False, error=str(exc),
        )]


def cmd_verify(config: RunConfig) -> tuple:
    """Run the configured suites over the weight range.

    Returns (reports, exit_code): exit 0 iff every non-skipped check passed.
    """
    ctx = config.ctx()
    weights = range(config.weight_min, config.weight_max + 1)
    reports = []
    for suite in config.suites:
        start = time.monotonic()
        if config.parallelism > 1:
            with ThreadPoolExecutor(max_workers=config.parallelism) as pool:
                batches = list(pool.map(lambda l: _run_suite_weight(suite, l, ctx), weights))
        else:
            batches = [_run_suite_weight(suite, l, ctx) for l in weights]
        checks = [rec for batch in batches for rec in batch]
        passed = sum(1 for c in checks if c.passed)
        reports.append(SuiteReport(
            suite=suite, checks=checks,
            passed_count=passed, failed_count=len(checks) - passed,
            wall_time=time.monotonic() - start,
            config_echo=config,
        ))
    failed = sum(r.failed_count for r in reports)
    return reports, (1 if failed else 0)


# ---------------------------------------------------------------------------
# report writers
# ---------------------------------------------------------------------------

def render_json(reports: Sequence[SuiteReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"


def render_csv(reports: Sequence[SuiteReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["suite", "label", "weight", "passed", "exact",
                     "residual_midpoint", "residual_radius"])
    for r in reports:
        for c in r.checks:
            writer.writerow([r.suite, c.label, c.weight, c.passed, c.exact,
                             c.residual_midpoint, c.residual_radius])
    return buf.getvalue()


def render_text(reports: Sequence[SuiteReport]) -> str:
    lines = []
    for r in reports:
        lines.append(f"suite {r.suite}: {r.passed_count} passed, "
                     f"{r.failed_count} failed ({r.wall_time:.2f}s)")
        for c in r.checks:
            if c.skipped_reason is not None:
                lines.append(f"  [SKIP] {c.label}: {c.skipped_reason}")
            elif c.error is not None:
                lines.append(f"  [ERR ] {c.label}: {c.error}")
            else:
                mark = "PASS" if c.passed else "FAIL"
                kind = "exact" if c.exact else f"residual {c.residual_radius}"
                lines.append(f"  [{mark}] {c.label} ({kind})")
    return "\n".join(lines) + "\n"


_RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


# ---------------------------------------------------------------------------
# argument parsing and entry point
# ---------------------------------------------------------------------------

def _parse_weights(spec: str) -> tuple:
    if ".." in spec:
        a, b = spec.split("..", 1)
        return int(a), int(b)
    v = int(spec)
    return v, v


def _parse_tol(spec: str) -> int:
    s = spec.strip().lower()
    if s.startswith("1e-"):
        return int(s[3:])
    raise ValueError(f"tolerance must look like 1e-40, got {spec!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dzv",
        description="Compute double zeta values and Bernoulli numbers with "
                    "certified precision, and verify their identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_b = sub.add_parser("bernoulli", help="print an exact Bernoulli number")
    p_b.add_argument("m", type=int)

    p_d = sub.add_parser("dzeta", help="print a double zeta value to certified digits")
    p_d.add_argument("l1", type=int)
    p_d.add_argument("l2", type=int)
    p_d.add_argument("-p", "--precision", type=int, default=None)

    p_v = sub.add_parser("verify", help="run verification suites over a weight range")
    p_v.add_argument("--suites", type=str, required=False, default=None,
                     help="comma-separated suite names (default: all)")
    p_v.add_argument("--weights", type=str, default=None,
                     help="A..B inclusive (default 3..12)")
    p_v.add_argument("--precision", type=int, default=None, help="working precision in bits")
    p_v.add_argument("--tol", type=str, default=None, help="residual tolerance, e.g. 1e-40")
    p_v.add_argument("--format", type=str, default=None, choices=["json", "csv", "text"])
    p_v.add_argument("--out", type=str, default=None)
    p_v.add_argument("--jobs", type=int, default=None)
    p_v.add_argument("--config", type=str, default=None,
                     help="JSON file with the same keys as the flags; flags win")
    return parser


def _default_precision() -> int:
    env = os.environ.get(_ENV_PRECISION)
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return _DEFAULT_PRECISION


def _config_from_args(args) -> RunConfig:
    file_cfg = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            file_cfg = json.load(fh)

    def pick(flag, key, default):
        if flag is not None:
            return flag
        if key in file_cfg:
            return file_cfg[key]
        return default

    weights = pick(args.weights, "weights", "3..12")
    wmin, wmax = _parse_weights(str(weights))
    suites_arg = pick(args.suites, "suites", None)
    if suites_arg is None:
        suites = SUITE_NAMES
    elif isinstance(suites_arg, str):
        suites = tuple(s.strip() for s in suites_arg.split(",") if s.strip())
    else:
        suites = tuple(suites_arg)
    tol_arg = pick(args.tol, "tol", f"1e-{_DEFAULT_TOL_EXP}")
    return RunConfig(
        precision_bits=int(pick(args.precision, "precision", _default_precision())),
        tolerance_exponent=_parse_tol(str(tol_arg)),
        weight_min=wmin,
        weight_max=wmax,
        suites=suites,
        output_format=str(pick(args.format, "format", "text")),
        output_path=pick(args.out, "out", None),
        parallelism=int(pick(args.jobs, "jobs", 1)),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2

    try:
        if args.command == "bernoulli":
            if args.m < 0:
                print("error: the Bernoulli index must be nonnegative", file=sys.stderr)
                return 2
            print(bernoulli(args.m))
            return 0

        if args.command == "dzeta":
            prec = args.precision if args.precision is not None else _default_precision()
            if args.l1 < 2 or args.l2 < 1:
                print("error: need l1 >= 2 and l2 >= 1 for convergence", file=sys.stderr)
                return 2
            ctx = PrecisionCtx(prec, Fraction(1, 10 ** _DEFAULT_TOL_EXP))
            value = double_zeta(IndexPair(args.l1, args.l2), ctx)
            digits = certified_decimal(value, max(8, int(prec * 0.301)))
            print(f"{digits} ± {_radius_decimal(value.radius_fraction())}")
            return 0

        if args.command == "verify":
            try:
                config = _config_from_args(args)
            except (DomainError, ValueError, OSError) as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
            reports, code = cmd_verify(config)
            text = _RENDERERS[config.output_format](reports)
            if config.output_path:
                with open(config.output_path, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return code
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
