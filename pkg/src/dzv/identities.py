"""Executable identity checks over double zeta tables: congruence-filtered
restricted sums, the parity formulas, the mod-6 restricted sum formulas and
their even-weight restatements, the signed filter identity and the five
cube-root-of-unity equations behind them, and the exact chain linking the
l = 2 (mod 6) restricted sum formula to the gap-6 Bernoulli identities.

Numeric checks pass only when the residual ball certifies zero within the
context tolerance AND the two sides' enclosures intersect; exact checks
compare rationals or pi-polynomials and ignore the tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Tuple, Union

from .bernoulli import ramanujan_check, ramanujan_sum
from .dzeta import (
    DzvTable,
    IndexPair,
    gen_poly_eval,
    gen_poly_real,
    get_table,
    _divided_difference,
)
from .numerics import (
    ComplexBall,
    DomainError,
    PiPolynomial,
    PrecisionCtx,
    RealBall,
    ball_is_zero_within,
    ball_sum,
    complex_sum,
    cube_root_of_unity,
)
from .zeta import zeta_even_exact, zeta_numeric

__all__ = [
    "CongruenceFilter",
    "SumSpec",
    "CheckReport",
    "check_from_sides",
    "restricted_sum",
    "gkz_parity_check",
    "theorem1_check",
    "corollary1_check",
    "prop1_check",
    "lemma1_check",
    "corollary2_exact_chain",
]

_GUARD = 48
_ALLOWED_MODULI = (2, 3, 6)

Ball = Union[RealBall, ComplexBall]


@dataclass(frozen=True)
class CongruenceFilter:
    """Congruence conditions on a table pair: an optional (residue, modulus)
    constraint per index, moduli drawn from {2, 3, 6}."""

    first: Optional[Tuple[int, int]] = None
    second: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        for cond in (self.first, self.second):
            if cond is None:
                continue
            res, mod = cond
            if mod not in _ALLOWED_MODULI:
                raise DomainError(f"modulus {mod} not in {_ALLOWED_MODULI}")
            if not 0 <= res < mod:
                raise DomainError(f"residue {res} not reduced mod {mod}")

    def matches(self, p: IndexPair) -> bool:
        if self.first is not None and p.l1 % self.first[1] != self.first[0]:
            return False
        if self.second is not None and p.l2 % self.second[1] != self.second[0]:
            return False
        return True


@dataclass(frozen=True)
class SumSpec:
    """A signed combination of congruence-filtered sums over one table."""

    terms: Tuple[Tuple[Fraction, CongruenceFilter], ...]

    @staticmethod
    def of(*terms) -> "SumSpec":
        return SumSpec(tuple((Fraction(c), f) for c, f in terms))

    def coefficient_for(self, p: IndexPair) -> Fraction:
        return sum((c for c, f in self.terms if f.matches(p)), Fraction(0))


def _scale(ball: RealBall, c: Fraction, wp: int) -> RealBall:
    """c * ball, exact when c is dyadic."""
    den = c.denominator
    if den & (den - 1) == 0:
        return ball.mul_int(c.numerator).mul_2exp(-(den.bit_length() - 1))
    return ball.mul(RealBall.from_fraction(c, wp), wp)


def restricted_sum(t: DzvTable, spec: SumSpec) -> RealBall:
    """Signed filtered sum over the table, by per-pair coefficient
    accumulation (overlapping filters add their coefficients; an empty match
    contributes the exact zero ball)."""
    wp = t.ctx.working_precision + _GUARD
    terms = []
    for pair in t.pairs():
        c = spec.coefficient_for(pair)
        if c:
            terms.append(_scale(t.entries[pair], c, wp))
    return ball_sum(terms, wp)


# ---------------------------------------------------------------------------
# check reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check: both sides, their residual, and the
    pass verdict (residual certified zero within tolerance and sides
    intersecting, or exact equality for exact checks)."""

    label: str
    weight: int
    lhs: Ball
    rhs: Ball
    residual: Ball
    passed: bool
    tolerance: Fraction
    exact: bool = False


def _real_report(label: str, weight: int, lhs: RealBall, rhs: RealBall,
                 ctx: PrecisionCtx, exact_ok: Optional[bool] = None) -> CheckReport:
    wp = ctx.working_precision + _GUARD
    residual = lhs.sub(rhs, wp)
    ok, _ = ball_is_zero_within(residual, ctx.target_tolerance)
    passed = ok and lhs.intersects(rhs)
    if exact_ok is not None:
        passed = passed and exact_ok
    return CheckReport(label, weight, lhs, rhs, residual, passed,
                       ctx.target_tolerance, exact=exact_ok is not None)


def _complex_report(label: str, weight: int, lhs: ComplexBall, rhs: ComplexBall,
                    ctx: PrecisionCtx) -> CheckReport:
    wp = ctx.working_precision + _GUARD
    residual = lhs.sub(rhs, wp)
    ok_re, _ = ball_is_zero_within(residual.real, ctx.target_tolerance)
    ok_im, _ = ball_is_zero_within(residual.imag, ctx.target_tolerance)
    passed = ok_re and ok_im and lhs.intersects(rhs)
    return CheckReport(label, weight, lhs, rhs, residual, passed,
                       ctx.target_tolerance)


def check_from_sides(label: str, weight: int, lhs: Ball, rhs: Ball,
                     ctx: PrecisionCtx) -> CheckReport:
    """Build a numeric check report from two enclosures of the same quantity."""
    if isinstance(lhs, ComplexBall) or isinstance(rhs, ComplexBall):
        return _complex_report(label, weight, lhs, rhs, ctx)
    return _real_report(label, weight, lhs, rhs, ctx)


def _exact_report(label: str, weight: int, lhs_q: Fraction, rhs_q: Fraction,
                  holds: bool, ctx: PrecisionCtx) -> CheckReport:
    prec = 128
    lhs = RealBall.from_fraction(lhs_q, prec)
    rhs = RealBall.from_fraction(rhs_q, prec)
    residual = RealBall.from_fraction(lhs_q - rhs_q, prec)
    return CheckReport(label, weight, lhs, rhs, residual, holds,
                       ctx.target_tolerance, exact=True)


# ---------------------------------------------------------------------------
# filters used by the named checks
# ---------------------------------------------------------------------------

def _on_first(res: int, mod: int) -> CongruenceFilter:
    return CongruenceFilter(first=(res, mod))


def _on_both(r1: int, r2: int) -> CongruenceFilter:
    return CongruenceFilter(first=(r1, 6), second=(r2, 6))


def _mod6_for(res3: int, odd: bool) -> int:
    """The residue mod 6 that is = res3 (mod 3) with the requested parity."""
    r = res3 % 3
    return r if (r % 2 == 1) == odd else r + 3


def _alternating_mod3_sum(t: DzvTable, res3: int) -> RealBall:
    """sum over l1 = res3 (mod 3) of (-1)^(l1-1) zeta(l1, l2)."""
    return restricted_sum(t, SumSpec.of(
        (1, _on_first(_mod6_for(res3, odd=True), 6)),
        (-1, _on_first(_mod6_for(res3, odd=False), 6)),
    ))


def _plain_mod3_sum(t: DzvTable, res3: int) -> RealBall:
    return restricted_sum(t, SumSpec.of((1, _on_first(res3 % 3, 3))))


# ---------------------------------------------------------------------------
# parity formulas (even weight)
# ---------------------------------------------------------------------------

def gkz_parity_check(t: DzvTable) -> Tuple[CheckReport, CheckReport]:
    """Both-even sum = (3/4) zeta(l) and both-odd sum = (1/4) zeta(l) for even
    weight; at weight 4 both equalities are additionally verified exactly in
    pi-power arithmetic."""
    l = t.weight
    if l % 2 != 0 or l < 4:
        raise DomainError("parity formulas need even weight >= 4")
    ctx = t.ctx
    wp = ctx.working_precision + _GUARD
    zl = zeta_numeric(l, ctx)
    s_even = restricted_sum(t, SumSpec.of((1, CongruenceFilter((0, 2), (0, 2)))))
    s_odd = restricted_sum(t, SumSpec.of((1, CongruenceFilter((1, 2), (1, 2)))))
    rhs_even = _scale(zl, Fraction(3, 4), wp)
    rhs_odd = _scale(zl, Fraction(1, 4), wp)

    exact_even = exact_odd = None
    if l == 4:
        z2, z4 = zeta_even_exact(2), zeta_even_exact(4)
        dz22 = (z2 * z2 - z4) * Fraction(1, 2)   # harmonic relation at (2,2)
        dz31 = z4 - dz22                          # weight-4 sum formula
        exact_even = dz22 == z4 * Fraction(3, 4)
        exact_odd = dz31 == z4 * Fraction(1, 4)

    return (
        _real_report(f"gkz-parity.even[l={l}]", l, s_even, rhs_even, ctx, exact_even),
        _real_report(f"gkz-parity.odd[l={l}]", l, s_odd, rhs_odd, ctx, exact_odd),
    )


# ---------------------------------------------------------------------------
# mod-6 restricted sum formulas
# ---------------------------------------------------------------------------

def theorem1_check(t: DzvTable) -> CheckReport:
    """The weight-mod-3 restricted sum formula over first-index classes mod 6."""
    l = t.weight
    ctx = t.ctx
    wp = ctx.working_precision + _GUARD
    case = l % 3
    if case == 0:
        lhs = restricted_sum(t, SumSpec.of(
            (1, _on_first(3, 6)), (-1, _on_first(4, 6)), (-1, _on_first(5, 6))))
        rhs = restricted_sum(t, SumSpec.of((1, _on_first(1, 2)))).mul(
            RealBall.from_fraction(Fraction(1, 3), wp), wp)
        tag = "i"
    elif case == 1:
        lhs = restricted_sum(t, SumSpec.of(
            (1, _on_first(3, 6)), (1, _on_first(4, 6)), (-1, _on_first(5, 6))))
        rhs = restricted_sum(t, SumSpec.of((1, _on_first(0, 2)))).mul(
            RealBall.from_fraction(Fraction(1, 3), wp), wp)
        tag = "ii"
    else:
        lhs = restricted_sum(t, SumSpec.of((1, _on_first(4, 6))))
        odd_sum = restricted_sum(t, SumSpec.of((1, _on_first(1, 2))))
        rhs = zeta_numeric(l, ctx).mul(RealBall.from_fraction(Fraction(1, 6), wp), wp)
        rhs = rhs.sub(odd_sum.mul(RealBall.from_fraction(Fraction(1, 3), wp), wp), wp)
        tag = "iii"
    return _real_report(f"theorem1.{tag}[l={l}]", l, lhs, rhs, ctx)


def corollary1_check(t: DzvTable) -> CheckReport:
    """Even-weight restatement over both-index classes mod 6."""
    l = t.weight
    if l % 2 != 0 or l < 4:
        raise DomainError("the even-weight restatement needs even l >= 4")
    ctx = t.ctx
    wp = ctx.working_precision + _GUARD
    zl = zeta_numeric(l, ctx)
    case = l % 6
    if case == 0:
        lhs = restricted_sum(t, SumSpec.of(
            (1, _on_both(3, 3)), (-1, _on_both(4, 2)), (-1, _on_both(5, 1))))
        rhs = zl.mul(RealBall.from_fraction(Fraction(1, 12), wp), wp)
        tag = "i"
    elif case == 4:
        lhs = restricted_sum(t, SumSpec.of(
            (1, _on_both(3, 1)), (1, _on_both(4, 0)), (-1, _on_both(5, 5))))
        rhs = _scale(zl, Fraction(1, 4), wp)
        tag = "ii"
    else:
        lhs = restricted_sum(t, SumSpec.of((1, _on_both(4, 4))))
        rhs = zl.mul(RealBall.from_fraction(Fraction(1, 12), wp), wp)
        tag = "iii"
    return _real_report(f"corollary1.{tag}[l={l}]", l, lhs, rhs, ctx)


def prop1_check(t: DzvTable) -> CheckReport:
    """Signed filter identity: with r = 2l mod 3 split by parity of l1,

        [S(l1=r(3), odd) - S(l1=r(3), even) - S(l1=l-1(3)) - 2 S(l1=4(6))]
          = -frac((l+1)/3) zeta(l) + (2/3) T_l(-1, 1).
    """
    l = t.weight
    ctx = t.ctx
    wp = ctx.working_precision + _GUARD
    r2l = (2 * l) % 3
    rl1 = (l - 1) % 3
    spec = SumSpec.of(
        (1, _on_first(_mod6_for(r2l, odd=True), 6)),
        (-1, _on_first(_mod6_for(r2l, odd=False), 6)),
        (-1, _on_first(rl1, 3)),
        (-2, _on_first(4, 6)),
    )
    lhs = restricted_sum(t, spec)
    frac_part = Fraction((l + 1) % 3, 3)
    rhs = zeta_numeric(l, ctx).mul(RealBall.from_fraction(-frac_part, wp), wp)
    t_m11 = gen_poly_real(t, Fraction(-1), Fraction(1))
    rhs = rhs.add(t_m11.mul(RealBall.from_fraction(Fraction(2, 3), wp), wp), wp)
    return _real_report(f"prop1[l={l}]", l, lhs, rhs, ctx)


# ---------------------------------------------------------------------------
# cube-root-of-unity equations
# ---------------------------------------------------------------------------

def lemma1_check(l: int, ctx: PrecisionCtx) -> list[CheckReport]:
    """The five identities obtained by summing T_l specializations over
    x in {1, omega, omega^2} (omega = exp(2 pi i/3)); residue-class sums mod 3
    appear on the right sides."""
    if l < 3:
        raise DomainError("cube-root-of-unity equations need weight >= 3")
    t = get_table(l, ctx)
    wp = ctx.working_precision + _GUARD
    omega = cube_root_of_unity(ctx)
    xs = [ComplexBall.one(), omega, omega.conj()]
    one = ComplexBall.one()
    zl = zeta_numeric(l, ctx)
    zl_c = ComplexBall.from_real(zl)
    t_m11 = ComplexBall.from_real(gen_poly_real(t, Fraction(-1), Fraction(1)))
    half_lp1 = RealBall.from_fraction(Fraction(l + 1, 2), wp)
    shared_tail = ComplexBall.from_real(zl.mul(half_lp1, wp)).sub(t_m11, wp)

    def T(xb: ComplexBall, yb: ComplexBall) -> ComplexBall:
        return gen_poly_eval(t, xb, yb).value

    reports = []

    lhs1 = complex_sum((T(x.add(one, wp), one) for x in xs), wp)
    rhs1 = ComplexBall.from_real(_alternating_mod3_sum(t, 1).mul_int(3)).add(shared_tail, wp)
    reports.append(_complex_report(f"lemma1.eq1[l={l}]", l, lhs1, rhs1, ctx))

    lhs2 = complex_sum((T(x.add(one, wp), x) for x in xs), wp)
    rhs2 = ComplexBall.from_real(
        _alternating_mod3_sum(t, (2 * l) % 3).mul_int(3)).add(shared_tail, wp)
    reports.append(_complex_report(f"lemma1.eq2[l={l}]", l, lhs2, rhs2, ctx))

    lhs3 = complex_sum((T(x, one) for x in xs), wp)
    rhs3 = ComplexBall.from_real(_plain_mod3_sum(t, 1).mul_int(3))
    reports.append(_complex_report(f"lemma1.eq3[l={l}]", l, lhs3, rhs3, ctx))

    lhs4 = complex_sum((T(one, x) for x in xs), wp)
    rhs4 = ComplexBall.from_real(_plain_mod3_sum(t, (l - 1) % 3).mul_int(3))
    reports.append(_complex_report(f"lemma1.eq4[l={l}]", l, lhs4, rhs4, ctx))

    dd_sum = complex_sum((_divided_difference(x, one, l, wp) for x in xs), wp)
    lhs5 = dd_sum.mul(zl_c, wp)
    rhs5 = zl_c.mul_int(3 * ((l + 1) // 3))
    reports.append(_complex_report(f"lemma1.eq5[l={l}]", l, lhs5, rhs5, ctx))

    return reports


# ---------------------------------------------------------------------------
# exact chain: restricted sum formula -> gap-6 Bernoulli identities
# ---------------------------------------------------------------------------

def corollary2_exact_chain(l: int, ctx: PrecisionCtx = PrecisionCtx()) -> CheckReport:
    """Exact verification, in rational and pi-power arithmetic, that for
    l = 2 (mod 6), l >= 8:

      (a) the table has exactly (l-2)/6 pairs with l1 = l2 = 4 (mod 6);
      (b) sum_{j=4(6), 0<j<l} zeta(j) zeta(l-j) = ((l-1)/6) zeta(l) as
          pi-polynomials (every factor is an even zeta value);
      (c) converting (b) through zeta(m) = (-1)^(m/2+1) 2^(m-1) B_m/m! pi^m
          reproduces the m = 4 gap-6 Bernoulli identity exactly as checked by
          the bernoulli module.
    """
    if l % 6 != 2 or l < 8:
        raise DomainError("the exact chain needs l = 2 (mod 6) and l >= 8")

    count = sum(1 for l1 in range(2, l) if l1 % 6 == 4 and (l - l1) % 6 == 4)
    count_ok = count == (l - 2) // 6

    lhs_poly = sum(
        (zeta_even_exact(j) * zeta_even_exact(l - j) for j in range(4, l, 6)),
        start=PiPolynomial.zero(),
    )
    rhs_poly = zeta_even_exact(l) * Fraction(l - 1, 6)
    poly_ok = lhs_poly == rhs_poly

    # bridge to the Bernoulli convolution: multiply the pi^l coefficient
    # identity by (-1)^(l/2) l! / 2^(l-2)
    scale = Fraction((-1) ** (l // 2) * factorial(l), 2 ** (l - 2))
    bridge_lhs = lhs_poly.coeff(l) * scale
    bridge_rhs = rhs_poly.coeff(l) * scale
    verdict = ramanujan_check(l)[2]  # residue m = 4
    bridge_ok = (bridge_lhs == ramanujan_sum(l, 4)
                 and bridge_rhs == verdict.rhs
                 and verdict.holds)

    return _exact_report(
        f"corollary2-chain[l={l}]", l,
        lhs_poly.coeff(l), rhs_poly.coeff(l),
        count_ok and poly_ok and bridge_ok, ctx,
    )
