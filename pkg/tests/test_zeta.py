"""Tests for exact even zeta values and the Euler-Maclaurin Hurwitz engine."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from dzv.numerics import DomainError, PiPolynomial, PrecisionCtx, RealBall, pipoly_eval
from dzv.zeta import hurwitz_zeta, zeta_even_exact, zeta_numeric, zeta_value

from oracles import (
    akiyama_tanigawa_bernoulli,
    hurwitz_direct_interval,
    zeta_direct_interval,
)

_AT = akiyama_tanigawa_bernoulli(60)


def _zeta_even_coeff_oracle(m: int) -> Fraction:
    """Coefficient of pi^m in zeta(m), from the oracle Bernoulli numbers."""
    return Fraction((-1) ** (m // 2 + 1) * 2 ** (m - 1), factorial(m)) * _AT[m]


# ---------------------------------------------------------------------------
# exact even values
# ---------------------------------------------------------------------------

def test_zeta_even_exact_small_cases():
    assert zeta_even_exact(2) == PiPolynomial.single(2, Fraction(1, 6))
    assert zeta_even_exact(4) == PiPolynomial.single(4, Fraction(1, 90))
    assert zeta_even_exact(8) == PiPolynomial.single(8, Fraction(1, 9450))
    assert zeta_even_exact(14) == PiPolynomial.single(14, Fraction(2, 18243225))


def test_zeta_even_exact_matches_oracle_formula():
    for m in range(2, 42, 2):
        assert zeta_even_exact(m) == PiPolynomial.single(m, _zeta_even_coeff_oracle(m))


def test_zeta_even_exact_rejects_odd():
    with pytest.raises(DomainError):
        zeta_even_exact(3)
    with pytest.raises(DomainError):
        zeta_even_exact(0)


# ---------------------------------------------------------------------------
# numeric values against the direct-summation oracle
# ---------------------------------------------------------------------------

def test_zeta_numeric_examples(ctx128):
    lo, hi = zeta_direct_interval(2, 4096)
    z2 = zeta_numeric(2, ctx128)
    assert lo <= z2.lower_fraction() and z2.upper_fraction() <= hi

    lo, hi = zeta_direct_interval(3, 2048)
    z3 = zeta_numeric(3, ctx128)
    assert lo <= z3.lower_fraction() and z3.upper_fraction() <= hi


def test_zeta_numeric_consistency_even_arguments(ctx64):
    # every even s <= 40: ball intersects the direct-sum enclosure
    for s in range(2, 42, 2):
        lo, hi = zeta_direct_interval(s, 64)
        z = zeta_numeric(s, ctx64)
        assert max(lo, z.lower_fraction()) <= min(hi, z.upper_fraction()), s


def test_zeta_numeric_rejects_divergent():
    with pytest.raises(DomainError):
        zeta_numeric(1, PrecisionCtx(64))
    with pytest.raises(DomainError):
        zeta_numeric(0, PrecisionCtx(64))


def test_zeta_numeric_monotone_precision():
    for s in (2, 3, 7, 20):
        r1 = zeta_numeric(s, PrecisionCtx(96)).radius_fraction()
        r2 = zeta_numeric(s, PrecisionCtx(192)).radius_fraction()
        assert r2 <= r1


def test_zeta_numeric_radius_meets_relative_target():
    for prec in (64, 128, 256):
        ctx = PrecisionCtx(prec)
        for s in (2, 3, 11):
            z = zeta_numeric(s, ctx)
            assert z.radius_fraction() <= z.lower_fraction() * Fraction(4, 2**prec)


def test_zeta_value_bundles_exact_and_numeric(ctx128):
    v = zeta_value(6, ctx128)
    assert v.exact == zeta_even_exact(6)
    assert v.numeric.intersects(pipoly_eval(v.exact, ctx128))
    assert zeta_value(5, ctx128).exact is None


# ---------------------------------------------------------------------------
# Hurwitz zeta
# ---------------------------------------------------------------------------

def test_hurwitz_at_one_is_riemann(ctx128):
    h = hurwitz_zeta(2, 1, ctx128)
    z = zeta_numeric(2, ctx128)
    assert h.intersects(z)


def test_hurwitz_against_direct_sum_oracle(ctx128):
    for s, a in ((2, Fraction(1)), (3, Fraction(3, 2)), (5, Fraction(7, 3)), (4, Fraction(12))):
        lo, hi = hurwitz_direct_interval(s, a, 3000)
        h = hurwitz_zeta(s, a, ctx128)
        assert max(lo, h.lower_fraction()) <= min(hi, h.upper_fraction()), (s, a)


def test_hurwitz_shift_example(ctx128):
    # zeta(4,3) = zeta(4) - 1 - 2^-4
    h = hurwitz_zeta(4, 3, ctx128)
    expected = zeta_numeric(4, ctx128).sub(
        RealBall.from_fraction(Fraction(17, 16), 176), 176)
    assert h.intersects(expected)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=2, max_value=12),
       st.fractions(min_value=1, max_value=20, max_denominator=16))
def test_hurwitz_defining_recurrence(s, a):
    """zeta(s,a) - zeta(s,a+1) - a^-s must enclose zero tightly."""
    ctx = PrecisionCtx(128)
    wp = 200
    res = hurwitz_zeta(s, a, ctx).sub(hurwitz_zeta(s, a + 1, ctx), wp)
    res = res.sub(RealBall.from_fraction(1 / Fraction(a) ** s, wp), wp)
    assert res.contains_zero()
    # radius stays at roundoff scale: a few ulps of the leading value
    assert res.radius_fraction() <= Fraction(1, 2**120)


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=2, max_value=9),
       st.fractions(min_value=1, max_value=10, max_denominator=8))
def test_hurwitz_derivative_vs_finite_difference(s, a):
    """(zeta(s,a+h) - zeta(s,a))/h = -s zeta(s+1,a) + O(h), with the O(h)
    Taylor remainder bounded by s(s+1) zeta(s+2,a) h / 2."""
    ctx = PrecisionCtx(128)
    wp = 200
    h = Fraction(1, 2**40)
    fd = hurwitz_zeta(s, a + h, ctx).sub(hurwitz_zeta(s, a, ctx), wp)
    fd = fd.mul(RealBall.from_fraction(1 / h, wp), wp)
    deriv = hurwitz_zeta(s + 1, a, ctx).mul_int(-s)
    taylor_bound = (Fraction(s * (s + 1), 2)
                    * hurwitz_zeta(s + 2, a, ctx).upper_fraction() * h)
    residual = fd.sub(deriv, wp).add_error(taylor_bound)
    assert residual.contains_zero()


def test_hurwitz_ball_argument(ctx128):
    a = RealBall.from_fraction(Fraction(5, 2), 160).add_error(Fraction(1, 10**20))
    enclosing = hurwitz_zeta(3, a, ctx128)
    at_mid = hurwitz_zeta(3, Fraction(5, 2), ctx128)
    assert enclosing.contains_ball(at_mid)
    # exact ball argument behaves like the rational
    exact = hurwitz_zeta(3, RealBall.from_fraction(Fraction(5, 2), 160), ctx128)
    assert exact.same_enclosure(at_mid)


def test_hurwitz_high_precision_escalation():
    # 512-bit target forces the parameter ladder well past its starting rung
    ctx = PrecisionCtx(512)
    z = hurwitz_zeta(3, 1, ctx)
    assert z.radius_fraction() <= z.lower_fraction() * Fraction(1, 2**512)
    lo, hi = zeta_direct_interval(3, 1024)
    assert max(lo, z.lower_fraction()) <= min(hi, z.upper_fraction())


def test_hurwitz_preconditions(ctx128):
    with pytest.raises(DomainError):
        hurwitz_zeta(1, 1, ctx128)
    with pytest.raises(DomainError):
        hurwitz_zeta(3, Fraction(1, 2), ctx128)
    bad = RealBall.from_fraction(Fraction(1), 64).add_error(Fraction(1, 4))
    with pytest.raises(DomainError):
        hurwitz_zeta(3, bad, ctx128)
